#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcp/capacity.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/verify.hpp"

using namespace lcp;
using namespace lcp::cap;

namespace {

const Triangle& six_nine_thirteen() {
  static const Triangle t = Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0));
  return t;
}

constexpr double kR0 = 0.3346161009568417919464744;

}  // namespace

TEST_CASE("exact shapes are recognised up to similarity") {
  const Triangle& unit = exact::iso_right_unit().triangle;
  const Complex a(-0.4, 1.3), b(2.0, -1.0);
  auto m = detect_exact_shape(unit.transformed(a, b));
  REQUIRE(m);
  CHECK(m->shape == ExactShape::IsoRight);
  CHECK(m->chart_to_tri.ratio() == doctest::Approx(std::abs(a)));

  const Triangle& t30 = exact::triangle_306090().triangle;
  const Triangle mirrored = Triangle::make(std::conj(t30.vertex(0)), std::conj(t30.vertex(1)), std::conj(t30.vertex(2)));
  for (const Triangle& t : {t30.transformed(a, b), mirrored.transformed(a, b)}) {
    auto s = detect_exact_shape(t);
    REQUIRE(s);
    CHECK(s->shape == ExactShape::Triangle306090);
    // the similarity carries chart vertices onto triangle vertices
    for (int k = 0; k < 3; ++k) {
      const Complex img = s->chart_to_tri.apply(t30.vertex(k));
      double best = 1e300;
      for (int j = 0; j < 3; ++j) best = std::min(best, std::abs(img - t.vertex(j)));
      CHECK(best < 1e-12 * t.diameter());
    }
  }
  CHECK_FALSE(detect_exact_shape(six_nine_thirteen()));
  CHECK_FALSE(detect_exact_shape(Triangle::make(0.0, 1.0, Complex(0.0, 1.0 + 1e-6))));
}

TEST_CASE("radius_at examples") {
  const double t0 = exact::t0_closed_form();
  const CapacityReport r = radius_at(exact::iso_right_unit().triangle, Complex(t0, t0));
  CHECK(r.backend == Backend::SigmaExact);
  CHECK(std::abs(r.inner_radius - 0.3346161010) < 1e-10);

  const Complex centroid(5.0 / 9.0, 4.0 * std::sqrt(35.0) / 9.0);
  const CapacityReport s = radius_at(six_nine_thirteen(), centroid);
  CHECK(s.backend == Backend::SchwarzChristoffel);
  CHECK(std::abs(s.inner_radius - 1.802305) < 1e-5);
  CHECK(s.query == Query::RadiusAt);

  const Triangle legs2 = Triangle::make(0.0, 2.0, Complex(0.0, 2.0));
  CHECK(std::abs(radius_at(legs2, Complex(2 * t0, 2 * t0)).inner_radius - 0.6692322019) < 1e-9);
  CHECK_THROWS_AS(radius_at(exact::iso_right_unit().triangle, Complex(2.0, 2.0)), DomainError);
}

TEST_CASE("report bookkeeping") {
  const Complex w(0.7, 1.9);
  const CapacityReport r = radius_at(six_nine_thirteen(), w);
  CHECK(r.barycentric.b1 + r.barycentric.b2 + r.barycentric.b3 == doctest::Approx(1.0));
  CHECK(r.barycentric.b1 > 0.0);
  CHECK(r.barycentric.b2 > 0.0);
  CHECK(r.barycentric.b3 > 0.0);
  const int k = shortest_side(six_nine_thirteen());
  CHECK(k == 0);
  CHECK(r.distance_to_shortest_side == doctest::Approx(six_nine_thirteen().distance_to_side(w, 0)));
  // isosceles tie goes to the lower index
  CHECK(shortest_side(exact::iso_right_unit().triangle) == 0);
}

TEST_CASE("exact and SC backends agree") {
  const Triangle t = exact::iso_right_unit().triangle.transformed(Complex(0.3, 1.1), Complex(-1.0, 0.5));
  const Triangle t30 = exact::triangle_306090().triangle.transformed(Complex(-0.2, 0.4), 3.0);
  for (const Triangle& tri : {t, t30}) {
    const RadiusEngine exact(tri), sc(tri, Backend::SchwarzChristoffel);
    CHECK(exact.backend() != Backend::SchwarzChristoffel);
    CHECK(sc.sc_map() != nullptr);
    for (double s : {0.2, 0.5, 0.8})
      for (double u : {0.3, 0.6}) {
        const Complex w = tri.point({1.0 - s, s * (1.0 - u), s * u});
        CHECK(std::abs(exact(w) - sc(w)) < 1e-8);
      }
    const CapacityReport a = least_capacity_point(tri);
    const CapacityReport b = least_capacity_point(tri, Backend::SchwarzChristoffel);
    CHECK(std::abs(a.inner_radius - b.inner_radius) < 1e-8);
    CHECK(std::abs(a.point - b.point) < 1e-6 * tri.diameter());
  }
  const RadiusEngine jac(exact::iso_right_unit().triangle, Backend::JacobiExact);
  const Complex w(0.2, 0.3);
  CHECK(std::abs(jac(w) - 1.0 / exact::h_sigma(w)) < 1e-10);
  CHECK_THROWS_AS(RadiusEngine(six_nine_thirteen(), Backend::SigmaExact), DomainError);
  CHECK_THROWS_AS(RadiusEngine(exact::triangle_306090().triangle, Backend::SigmaExact), DomainError);
}

TEST_CASE("least capacity points") {
  const CapacityReport iso = least_capacity_point(exact::iso_right_unit().triangle);
  const double t0 = exact::t0_closed_form();
  CHECK(iso.query == Query::LeastCapacityPoint);
  CHECK(iso.converged);
  CHECK(std::abs(iso.point - Complex(t0, t0)) < 1e-15);
  CHECK(std::abs(iso.inner_radius - kR0) < 1e-12);

  const double k = exact::triangle_306090().kappa;
  const CapacityReport t30 = least_capacity_point(exact::triangle_306090().triangle);
  CHECK(t30.converged);
  CHECK(std::abs(t30.point.real() / k - 0.3599371272) < 1e-8);
  CHECK(std::abs(t30.point.imag() / k - 0.4062604057) < 1e-8);
  CHECK(std::abs(t30.inner_radius - 0.2105704622 * 2.0 * k) < 1e-9);

  const CapacityReport sc = least_capacity_point(six_nine_thirteen());
  CHECK(sc.backend == Backend::SchwarzChristoffel);
  CHECK(std::abs(sc.point.real() - 0.929617) < 1e-5);
  CHECK(std::abs(sc.point.imag() - 1.842564) < 1e-5);
  CHECK(std::abs(sc.inner_radius - 1.979479) < 1e-5);
  CHECK(std::abs(sc.distance_to_shortest_side - 1.842564) < 1e-5);
}

TEST_CASE("barycentric coordinates of the optimum are similarity invariant") {
  const CapacityReport base = least_capacity_point(six_nine_thirteen());
  const Complex a(0.6, -0.8), b(3.0, 1.0);
  const Triangle moved = six_nine_thirteen().transformed(a, b);
  const CapacityReport r = least_capacity_point(moved);
  CHECK(std::abs(r.barycentric.b1 - base.barycentric.b1) < 1e-9);
  CHECK(std::abs(r.barycentric.b2 - base.barycentric.b2) < 1e-9);
  CHECK(std::abs(r.barycentric.b3 - base.barycentric.b3) < 1e-9);
  CHECK(std::abs(r.inner_radius - std::abs(a) * base.inner_radius) < 1e-9);
}

TEST_CASE("figure geometry") {
  const Triangle& t = exact::iso_right_unit().triangle;
  const Complex c(0.301, 0.301);
  const FigureGeometry f = figure_geometry(t, c);
  REQUIRE(f.circle_images.size() == 10);
  REQUIRE(f.ray_images.size() == 24);
  CHECK(f.samples_per_curve == 512);
  for (const auto& ray : f.ray_images) CHECK(std::abs(ray.front() - c) < 1e-9);
  for (const auto& curve : f.circle_images)
    for (Complex p : curve) CHECK(t.contains(p, 1e-8 * t.diameter()));
  for (Complex p : f.circle_images.back()) CHECK(std::abs(t.signed_distance(p)) < 1e-6 * t.diameter());
  // small circle: diameter ~ (2 / 10) r
  const double r = radius_at(t, c).inner_radius;
  double diam = 0.0;
  for (Complex p : f.circle_images.front())
    for (Complex q : f.circle_images.front()) diam = std::max(diam, std::abs(p - q));
  CHECK(std::abs(diam / (0.2 * r) - 1.0) < 0.2);
  CHECK(verify::inside_polygon(f.circle_images.front(), c));

  const verify::FigureAudit audit = verify::audit_figure(t, f);
  CHECK(audit.nesting_violations == 0);
  CHECK(audit.outside < 1e-8);
  CHECK(audit.outer_gap < 1e-6);
  CHECK(audit.worst_angle_error < 0.5);

  const Triangle& s = six_nine_thirteen();
  const FigureGeometry g = figure_geometry(s, Complex(0.929617, 1.842564), 10, 24, 256, false);
  CHECK(verify::audit_figure(s, g).outer_gap < 1e-4);
  CHECK_THROWS_AS(figure_geometry(t, Complex(0.9, 0.9)), DomainError);
}
