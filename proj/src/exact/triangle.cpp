#include "lcp/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lcp/errors.hpp"

namespace lcp {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

}  // namespace

Triangle Triangle::make(Complex a, Complex b, Complex c) {
  for (Complex v : {a, b, c}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("Triangle: non-finite vertex");
  }
  const double twice_area = cross(b - a, c - a);
  const double longest = std::max({std::abs(b - a), std::abs(c - b), std::abs(a - c)});
  if (std::abs(0.5 * twice_area) <= 1e-12 * longest * longest) throw DomainError("Triangle: degenerate vertices");
  if (twice_area < 0.0) std::swap(b, c);
  return Triangle({a, b, c});
}

std::array<double, 3> Triangle::angles_over_pi() const {
  std::array<double, 3> out{};
  for (int k = 0; k < 3; ++k) {
    const Complex prev = v_[(k + 2) % 3] - v_[k];
    const Complex next = v_[(k + 1) % 3] - v_[k];
    out[k] = std::abs(std::arg(prev / next)) / std::numbers::pi;
  }
  return out;
}

std::array<double, 3> Triangle::side_lengths() const {
  return {std::abs(v_[1] - v_[0]), std::abs(v_[2] - v_[1]), std::abs(v_[0] - v_[2])};
}

double Triangle::diameter() const {
  const auto s = side_lengths();
  return std::max({s[0], s[1], s[2]});
}

double Triangle::area() const { return 0.5 * cross(v_[1] - v_[0], v_[2] - v_[0]); }

Barycentric Triangle::barycentric(Complex p) const {
  const double twice = cross(v_[1] - v_[0], v_[2] - v_[0]);
  const double b1 = cross(v_[1] - p, v_[2] - p) / twice;
  const double b2 = cross(v_[2] - p, v_[0] - p) / twice;
  return {b1, b2, 1.0 - b1 - b2};
}

double Triangle::distance_to_side(Complex p, int k) const {
  const Complex a = v_[k];
  const Complex d = v_[(k + 1) % 3] - a;
  return std::abs(cross(d, p - a)) / std::abs(d);
}

double Triangle::signed_distance(Complex p) const {
  double d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 3; ++k) {
    const Complex a = v_[k];
    const Complex e = v_[(k + 1) % 3] - a;
    d = std::min(d, cross(e, p - a) / std::abs(e));
  }
  return d;
}

Triangle Triangle::transformed(Complex a, Complex b) const {
  return make(a * v_[0] + b, a * v_[1] + b, a * v_[2] + b);
}

}  // namespace lcp
