#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcp/errors.hpp"
#include "lcp/triangle.hpp"

using namespace lcp;

TEST_CASE("vertices are reordered counterclockwise keeping the first") {
  const Triangle t = Triangle::make(0.0, Complex(0.0, 1.0), 1.0);
  CHECK(t.vertex(0) == Complex(0.0, 0.0));
  CHECK(t.vertex(1) == Complex(1.0, 0.0));
  CHECK(t.vertex(2) == Complex(0.0, 1.0));
  CHECK(t.area() == doctest::Approx(0.5));
}

TEST_CASE("degenerate triangles are rejected") {
  CHECK_THROWS_AS(Triangle::make(0.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(Triangle::make(0.0, 1.0, Complex(0.5, 1e-13)), DomainError);
  CHECK_THROWS_AS(Triangle::make(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(Triangle::make(0.0, 1.0, Complex(std::nan(""), 1.0)), DomainError);
}

TEST_CASE("angles sum to pi") {
  const Triangle t = Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0));
  const auto a = t.angles_over_pi();
  CHECK(a[0] + a[1] + a[2] == doctest::Approx(1.0).epsilon(1e-14));
  const auto s = t.side_lengths();
  CHECK(s[0] == doctest::Approx(6.0));
  CHECK(s[1] == doctest::Approx(13.0));
  CHECK(s[2] == doctest::Approx(9.0));
  CHECK(t.diameter() == doctest::Approx(13.0));
  const auto r = Triangle::make(0.0, 1.0, Complex(0.0, 1.0)).angles_over_pi();
  CHECK(r[0] == doctest::Approx(0.5));
  CHECK(r[1] == doctest::Approx(0.25));
}

TEST_CASE("barycentric coordinates round trip") {
  const Triangle t = Triangle::make(Complex(0.3, -1.0), Complex(2.0, 0.5), Complex(-0.7, 1.9));
  for (Complex p : {Complex(0.5, 0.4), Complex(3.0, 3.0), t.centroid()}) {
    const Barycentric b = t.barycentric(p);
    CHECK(b.b1 + b.b2 + b.b3 == doctest::Approx(1.0));
    CHECK(std::abs(t.point(b) - p) < 1e-14);
  }
  const Barycentric c = t.barycentric(t.centroid());
  CHECK(c.b2 == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("signed distance and side distances") {
  const Triangle t = Triangle::make(0.0, 1.0, Complex(0.0, 1.0));
  CHECK(t.signed_distance(Complex(0.1, 0.2)) == doctest::Approx(0.1));
  CHECK(t.signed_distance(Complex(-0.5, 0.2)) == doctest::Approx(-0.5));
  CHECK(t.signed_distance(Complex(0.25, 0.25)) == doctest::Approx(0.25));
  CHECK(t.distance_to_side(Complex(0.25, 0.25), 1) == doctest::Approx(0.5 / std::sqrt(2.0)));
  CHECK(t.contains(0.5));
  CHECK_FALSE(t.contains(Complex(0.6, 0.6)));
  CHECK(t.contains(Complex(0.5, -1e-10), 1e-9));
}

TEST_CASE("transformed images and similarities") {
  const Triangle t = Triangle::make(0.0, 1.0, Complex(0.0, 1.0));
  const Complex a(0.0, 2.0), b(1.0, -1.0);
  const Triangle u = t.transformed(a, b);
  CHECK(u.area() == doctest::Approx(4.0 * t.area()));
  CHECK(std::abs(u.vertex(0) - b) < 1e-15);

  const Similarity s{Complex(1.0, 1.0), Complex(2.0, 0.0), true};
  const Complex z(0.3, 0.7);
  CHECK(std::abs(s.invert(s.apply(z)) - z) < 1e-15);
  CHECK(std::abs(s.apply(z) - (2.0 + Complex(1.0, 1.0) * std::conj(z))) < 1e-15);
  CHECK(s.ratio() == doctest::Approx(std::sqrt(2.0)));
}
