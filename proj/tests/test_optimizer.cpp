#include <doctest.h>

#include <cmath>

#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/optimizer.hpp"
#include "lcp/sc_map.hpp"

using namespace lcp;
using lcp::sc::SCMap;
using lcp::sc::InvertResult;
using lcp::sc::InnerRadiusEval;
using namespace lcp::opt;

namespace {

double radius_sigma(Complex w) { return 1.0 / exact::h_sigma(w); }

}  // namespace

TEST_CASE("least capacity point of the unit isosceles right triangle") {
  const Optimum o = maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle);
  const double t0 = exact::t0_closed_form();
  CHECK(o.converged);
  CHECK(std::abs(o.point.real() - t0) < 1e-9);
  CHECK(std::abs(o.point.imag() - t0) < 1e-9);
  CHECK(std::abs(o.value - 0.3346161009568418) < 1e-12);
  CHECK(o.evals > 0);
  CHECK(o.evals <= OptimizerConfig{}.max_evals + 50);
}

TEST_CASE("least capacity point of the 30-60-90 triangle") {
  const double k = exact::triangle_306090().kappa;
  const Optimum o = maximize_inner_radius([](Complex w) { return 1.0 / exact::h_306090(w); }, exact::triangle_306090().triangle);
  CHECK(o.converged);
  CHECK(std::abs(o.point.real() / k - 0.3599371272) < 1e-8);
  CHECK(std::abs(o.point.imag() / k - 0.4062604057) < 1e-8);
}

TEST_CASE("least capacity point of the 6-9-13 triangle") {
  const Triangle t = Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0));
  const SCMap m = SCMap::build(t);
  const Optimum o = maximize_inner_radius([&](Complex w) { return m.inner_radius(w).radius; }, t);
  CHECK(std::abs(o.point - Complex(0.929617, 1.842564)) < 1e-5 * std::sqrt(2.0));
  CHECK(std::abs(o.value - 1.979479) < 1e-5);
}

TEST_CASE("deterministic") {
  const Optimum a = maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle);
  const Optimum b = maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle);
  CHECK(a.point == b.point);
  CHECK(a.value == b.value);
  CHECK(a.evals == b.evals);
}

TEST_CASE("scale equivariance") {
  const Triangle& t = exact::iso_right_unit().triangle;
  const Complex a(1.5, -0.8), b(-2.0, 3.0);
  const Optimum o = maximize_inner_radius(radius_sigma, t);
  const Optimum s = maximize_inner_radius([&](Complex w) { return std::abs(a) * radius_sigma((w - b) / a); }, t.transformed(a, b));
  CHECK(std::abs(s.point - (a * o.point + b)) < 1e-9 * std::abs(a));
  CHECK(std::abs(s.value - std::abs(a) * o.value) < 1e-9);
}

TEST_CASE("optimum stays inside and 2-D agrees with the 1-D axis search") {
  const Triangle& t = exact::iso_right_unit().triangle;
  const OptimizerConfig cfg;
  const Optimum o = maximize_inner_radius(radius_sigma, t, cfg);
  CHECK(t.signed_distance(o.point) >= cfg.penalty_margin * t.diameter());
  const SegmentOptimum s = maximize_on_segment([](double x) { return radius_sigma(Complex(x, x)); }, 0.2, 0.45, 1e-10);
  CHECK(std::abs(s.argmax - o.point.real()) < 1e-9);
  CHECK(std::abs(s.argmax - exact::t0_closed_form()) < 1e-11);
}

TEST_CASE("segment search") {
  const SegmentOptimum q = maximize_on_segment([](double y) { return -(y - 0.4) * (y - 0.4); }, 0.0, 1.0, 1e-10);
  CHECK(std::abs(q.argmax - 0.4) < 1e-12);
  CHECK(std::abs(q.max) < 1e-12);
  const double k = exact::iso_right_kober().kappa;
  const SegmentOptimum a = maximize_on_segment([](double y) { return 1.0 / exact::h_theta(Complex(0.0, y)); }, 0.2 * k, 0.6 * k);
  CHECK(std::abs(a.argmax / k - 0.3977567783173558) < 1e-11);
  CHECK_THROWS_AS(maximize_on_segment([](double y) { return y; }, 1.0, 0.0), DomainError);
}

TEST_CASE("evaluation budget and invalid configuration") {
  OptimizerConfig cfg;
  cfg.max_evals = 10;
  const Optimum o = maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle, cfg);
  CHECK_FALSE(o.converged);
  CHECK(exact::iso_right_unit().triangle.contains(o.point));
  CHECK(o.value > 0.0);

  OptimizerConfig bad;
  bad.tol_x = -1.0;
  CHECK_THROWS_AS(maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle, bad), DomainError);
  OptimizerConfig outside;
  outside.seed = {1.2, -0.1, -0.1};
  CHECK_THROWS_AS(maximize_inner_radius(radius_sigma, exact::iso_right_unit().triangle, outside), DomainError);
}

TEST_CASE("throwing objective points are rejected, not propagated") {
  const Triangle& t = exact::iso_right_unit().triangle;
  // radius undefined on the lower-left half of the triangle
  const Optimum o = maximize_inner_radius(
      [](Complex w) {
        if (w.real() + w.imag() < 0.5) throw DomainError("test: undefined here");
        return 1.0 / exact::h_sigma(w);
      },
      t, {.seed = {0.2, 0.4, 0.4}});
  CHECK(o.point.real() + o.point.imag() >= 0.5);
  CHECK(std::isfinite(o.value));
}
