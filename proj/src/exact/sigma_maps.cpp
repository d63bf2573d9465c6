#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/jacobi.hpp"

namespace lcp::exact {

namespace {

constexpr double kGuard = 1e-9;

void check_not_pole(Complex d, const char* what) {
  if (distance_to_lattice(d) < 1e-12) throw PoleError(std::string(what) + ": evaluation at a pole");
}

}  // namespace

Similarity unit_to_kober() {
  const double k = constants::kappa_iso();
  return {Complex(-k, -k), Complex(0.0, k), false};
}

TriangleChart TriangleChart::make(ChartKind kind) {
  switch (kind) {
    case ChartKind::IsoRightUnit:
      return {kind, 1.0, Triangle::make(0.0, 1.0, kI), Similarity{}};
    case ChartKind::IsoRightKober: {
      const double k = constants::kappa_iso();
      const Similarity s = unit_to_kober();
      const Complex inv_scale = 1.0 / s.scale;
      return {kind, k, Triangle::make(-k, k, Complex(0.0, k)), {inv_scale, -s.offset * inv_scale, false}};
    }
    case ChartKind::Triangle306090: {
      const double k = constants::kappa_306090();
      return {kind, k, Triangle::make(0.0, k, Complex(0.0, std::sqrt(3.0) * k)), Similarity{}};
    }
  }
  throw DomainError("TriangleChart: unknown kind");
}

const TriangleChart& iso_right_unit() {
  static const TriangleChart c = TriangleChart::make(ChartKind::IsoRightUnit);
  return c;
}
const TriangleChart& iso_right_kober() {
  static const TriangleChart c = TriangleChart::make(ChartKind::IsoRightKober);
  return c;
}
const TriangleChart& triangle_306090() {
  static const TriangleChart c = TriangleChart::make(ChartKind::Triangle306090);
  return c;
}

void require_in_closure(const TriangleChart& chart, Complex z, const char* what) {
  if (chart.triangle.signed_distance(z) < -kGuard * chart.triangle.diameter()) {
    throw DomainError(std::string(what) + ": point outside the triangle");
  }
}

void require_interior(const TriangleChart& chart, Complex z, const char* what) {
  require_in_closure(chart, z, what);
  if (chart.triangle.signed_distance(z) < kGuard * chart.triangle.diameter()) {
    throw BoundaryError(std::string(what) + ": point on or too close to the boundary");
  }
}

SigmaMapContext::SigmaMapContext(Complex w) : w_(w) {
  require_interior(iso_right_unit(), w, "SigmaMapContext");
  w_prime_ = Complex(1.0, 1.0) - kI * std::conj(w);
  const Complex wb = std::conj(w_);
  const Complex wpb = std::conj(w_prime_);
  // C_w = 1 / (f_w(1) / C_w)
  c_w_ = weierstrass_sigma(1.0 - w_prime_) * weierstrass_sigma(1.0 + w_prime_) * weierstrass_sigma(1.0 - wb) *
         weierstrass_sigma(1.0 + wb) /
         (weierstrass_sigma(1.0 - w_) * weierstrass_sigma(1.0 + w_) * weierstrass_sigma(1.0 - wpb) *
          weierstrass_sigma(1.0 + wpb));
}

Complex SigmaMapContext::operator()(Complex z) const {
  require_in_closure(iso_right_unit(), z, "f_w_sigma");
  const Complex wb = std::conj(w_);
  const Complex wpb = std::conj(w_prime_);
  for (Complex d : {z - w_prime_, z + w_prime_, z - wb, z + wb}) check_not_pole(d, "f_w_sigma");
  const Complex num = weierstrass_sigma(z - w_) * weierstrass_sigma(z + w_) * weierstrass_sigma(z - wpb) *
                      weierstrass_sigma(z + wpb);
  const Complex den = weierstrass_sigma(z - w_prime_) * weierstrass_sigma(z + w_prime_) *
                      weierstrass_sigma(z - wb) * weierstrass_sigma(z + wb);
  return c_w_ * num / den;
}

double SigmaMapContext::h() const {
  const Complex wb = std::conj(w_);
  const Complex wpb = std::conj(w_prime_);
  const Complex num = weierstrass_sigma(2.0 * w_) * weierstrass_sigma(w_ - wpb) * weierstrass_sigma(w_ + wpb);
  const Complex den = weierstrass_sigma(w_ - w_prime_) * weierstrass_sigma(w_ + w_prime_) *
                      weierstrass_sigma(w_ - wb) * weierstrass_sigma(w_ + wb);
  return std::abs(c_w_ * num / den);
}

Complex f_w_sigma(Complex z, const SigmaMapContext& ctx) { return ctx(z); }

double h_sigma(Complex w) { return SigmaMapContext(w).h(); }

double t0_closed_form() {
  const double kappa = elliptic_K(0.5) / std::sqrt(2.0);
  const Complex phi = arcsin_real(std::sqrt(0.5 * (1.0 + std::sqrt(3.0))));
  return elliptic_F(phi, 2.0).real() / (2.0 * kappa);
}

}  // namespace lcp::exact
