#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/hypergeometric.hpp"
#include "lcp/jacobi.hpp"

namespace lcp::exact {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Parameter and argument scale of the 30-60-90 map.
const double kM306090 = (2.0 + std::sqrt(3.0)) / 4.0;
const double kScale306090 = std::pow(2.0, 2.0 / 3.0) / std::pow(3.0, 0.75);

// Rejects points below the real axis and snaps round-off onto its upper side.
Complex upper_half_plane(Complex zeta, const char* what) {
  if (zeta.imag() < -1e-12 * std::max(1.0, std::abs(zeta))) {
    throw DomainError(std::string(what) + ": argument below the real axis");
  }
  if (!(zeta.imag() > 0.0)) zeta.imag(0.0);
  return zeta;
}

double kernel_from_half_plane_map(Complex theta, Complex dtheta) {
  return std::abs(dtheta) / (2.0 * std::abs(theta.imag()));
}

}  // namespace

Complex theta_iso(Complex z) {
  const auto& chart = iso_right_kober();
  require_in_closure(chart, z, "theta_iso");
  if (std::abs(z - Complex(0.0, chart.kappa)) < 1e-12) throw PoleError("theta_iso: pole at the vertex i kappa");
  const auto j = jacobi_sn_cn_dn(kSqrt2 * z, 0.5);
  return kSqrt2 * j.sn * j.dn;
}

Complex theta_iso_derivative(Complex z) {
  const auto& chart = iso_right_kober();
  require_in_closure(chart, z, "theta_iso_derivative");
  if (std::abs(z - Complex(0.0, chart.kappa)) < 1e-12) throw PoleError("theta_iso: pole at the vertex i kappa");
  const auto j = jacobi_sn_cn_dn(kSqrt2 * z, 0.5);
  return 2.0 * j.cn * (j.dn * j.dn - 0.5 * j.sn * j.sn);
}

Complex theta_iso_inv(Complex zeta) {
  zeta = upper_half_plane(zeta, "theta_iso_inv");
  if (zeta == Complex(0.0, 0.0)) return 0.0;
  return 0.5 * zeta * gauss_2f1(0.5, 0.75, 1.5, zeta * zeta);
}

Complex f_w_theta(Complex z, Complex w) {
  require_interior(iso_right_kober(), w, "f_w_theta");
  const Complex tw = theta_iso(w);
  const Complex tz = theta_iso(z);
  return (tz - tw) / (tz - std::conj(tw));
}

double h_theta(Complex w) {
  require_interior(iso_right_kober(), w, "h_theta");
  return kernel_from_half_plane_map(theta_iso(w), theta_iso_derivative(w));
}

double h_theta_axis(double y) {
  require_interior(iso_right_kober(), Complex(0.0, y), "h_theta_axis");
  const auto j = jacobi_sn_cn_dn(Complex(0.0, kSqrt2 * y), 0.5);
  return std::abs(kI * j.cn * j.cn * j.cn / (kSqrt2 * j.sn * j.dn));
}

double axis_critical_equation(double y) {
  const auto j = jacobi_sn_cn_dn(Complex(0.0, kSqrt2 * y), 0.5);
  return j.dn.real() - std::sqrt(0.5 * (1.0 + std::sqrt(3.0)));
}

double solve_axis_critical() {
  const double kappa = iso_right_kober().kappa;
  double lo = 0.3 * kappa;
  double hi = 0.5 * kappa;
  double f_lo = axis_critical_equation(lo);
  if (f_lo * axis_critical_equation(hi) > 0.0) throw ConvergenceError("solve_axis_critical: bracket lost");
  while (hi - lo > 1e-15 * kappa) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = axis_critical_equation(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    if (mid == lo && mid == hi) break;
  }
  double y = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    const auto j = jacobi_sn_cn_dn(Complex(0.0, kSqrt2 * y), 0.5);
    // d/dy dn(i sqrt2 y) = i sqrt2 (-m sn cn)
    const double slope = (kI * kSqrt2 * (-0.5) * j.sn * j.cn).real();
    const double step = axis_critical_equation(y) / slope;
    if (!std::isfinite(step) || std::abs(step) > 1e-9 * kappa) break;
    y -= step;
  }
  return y;
}

Complex theta_306090(Complex z) {
  const auto& chart = triangle_306090();
  require_in_closure(chart, z, "theta_306090");
  if (std::abs(z - chart.triangle.vertex(2)) < 1e-12) throw PoleError("theta_306090: pole at the vertex i sqrt3 kappa");
  const auto j = jacobi_sn_cn_dn(kScale306090 * z, kM306090);
  const Complex c1 = 1.0 + j.cn;
  const Complex c2 = c1 * c1;
  return 3.0 * std::sqrt(3.0) * j.sn * j.sn * j.dn * j.dn / (c2 * c2);
}

Complex theta_306090_derivative(Complex z) {
  const auto& chart = triangle_306090();
  require_in_closure(chart, z, "theta_306090_derivative");
  if (std::abs(z - chart.triangle.vertex(2)) < 1e-12) throw PoleError("theta_306090: pole at the vertex i sqrt3 kappa");
  const auto j = jacobi_sn_cn_dn(kScale306090 * z, kM306090);
  const Complex s = j.sn, c = j.cn, d = j.dn;
  const Complex c1 = 1.0 + c;
  const Complex c4 = c1 * c1 * c1 * c1;
  // N = s^2 d^2, M = (1 + c)^4; dN/du = 2 s c d (d^2 - m s^2), dM/du = -4 (1 + c)^3 s d
  const Complex dn_du = 2.0 * s * c * d * (d * d - kM306090 * s * s) / c4;
  const Complex dm_du = 4.0 * s * s * d * d * s * d / (c4 * c1);
  return 3.0 * std::sqrt(3.0) * kScale306090 * (dn_du + dm_du);
}

Complex theta_306090_inv(Complex zeta) {
  zeta = upper_half_plane(zeta, "theta_306090_inv");
  return incomplete_beta(0.5 + std::sqrt(zeta), 1.0 / 3.0, 1.0 / 3.0) - triangle_306090().kappa;
}

double h_306090(Complex w) {
  require_interior(triangle_306090(), w, "h_306090");
  return kernel_from_half_plane_map(theta_306090(w), theta_306090_derivative(w));
}

}  // namespace lcp::exact
