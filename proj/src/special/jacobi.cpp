#include "lcp/jacobi.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/quadrature.hpp"

namespace lcp {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxLanden = 32;

std::vector<quad::Singularity> f_singularities(double m) {
  std::vector<quad::Singularity> s{{1.0, -0.5}, {-1.0, -0.5}};
  if (m > 0.0) {
    const double r = 1.0 / std::sqrt(m);
    s.push_back({r, -0.5});
    s.push_back({-r, -0.5});
  } else if (m < 0.0) {
    const double r = 1.0 / std::sqrt(-m);
    s.push_back({Complex(0.0, r), -0.5});
    s.push_back({Complex(0.0, -r), -0.5});
  }
  return s;
}

// `accurate` with the signed zero of `direct` on the real axis, so branch
// cuts are approached from the side the quadrature samples.
Complex same_side(Complex direct, Complex accurate) {
  return direct.imag() == 0.0 ? Complex(accurate.real(), direct.imag()) : accurate;
}

// 1 - c t^2 near its root p (c p^2 taken as exactly 1): -c o (2p + o) with t = p + o.
Complex one_minus_scaled_square(double c, Complex t, Complex p, Complex offset) {
  return same_side(1.0 - c * t * t, -c * offset * (2.0 * p + offset));
}

quad::AnchoredIntegrand f_integrand(double m) {
  const double r = m > 0.0 ? 1.0 / std::sqrt(m) : 0.0;
  return [m, r](Complex t, Complex anchor, Complex offset) {
    const Complex t2 = t * t;
    Complex a = 1.0 - t2, b = 1.0 - m * t2;
    if (anchor == Complex(1.0, 0.0) || anchor == Complex(-1.0, 0.0)) a = one_minus_scaled_square(1.0, t, anchor, offset);
    if (r > 0.0 && (anchor == Complex(r, 0.0) || anchor == Complex(-r, 0.0)))
      b = one_minus_scaled_square(m, t, anchor, offset);
    return 1.0 / (std::sqrt(a) * std::sqrt(b));
  };
}

}  // namespace

JacobiReal jacobi_sn_cn_dn(double u, double m) {
  if (m < 0.0 || m > 1.0) throw DomainError("jacobi_sn_cn_dn: real entry point needs 0 <= m <= 1");
  if (m == 0.0) return {std::sin(u), std::cos(u), 1.0};
  if (m == 1.0) {
    const double s = 1.0 / std::cosh(u);
    return {std::tanh(u), s, s};
  }
  // Abramowitz & Stegun 16.4: AGM sequence, then backward recurrence on the
  // amplitude.
  std::array<double, kMaxLanden + 1> a{}, c{};
  a[0] = 1.0;
  double b = std::sqrt(1.0 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::abs(c[n]) > kEps * a[n] && n < kMaxLanden) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int k = n; k > 0; --k) phi = 0.5 * (phi + std::asin(c[k] / a[k] * std::sin(phi)));
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

JacobiComplex jacobi_sn_cn_dn(Complex u, double m) {
  if (!(m > 0.0 && m < 1.0)) throw DomainError("jacobi_sn_cn_dn: complex entry point needs 0 < m < 1");
  const auto [s, c, d] = jacobi_sn_cn_dn(u.real(), m);
  const auto [s1, c1, d1] = jacobi_sn_cn_dn(u.imag(), 1.0 - m);
  const double den = c1 * c1 + m * s * s * s1 * s1;
  if (den < 1e-24) throw PoleError("jacobi_sn_cn_dn: argument at a pole");
  return {Complex(s * d1, c * d * s1 * c1) / den,
          Complex(c * c1, -s * d * s1 * d1) / den,
          Complex(d * c1 * d1, -m * s * c * s1) / den};
}

double elliptic_K(double m) {
  if (!(m < 1.0)) throw DomainError("elliptic_K: requires m < 1");
  double a = 1.0;
  double b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > kEps * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return constants::pi / (a + b);
}

Complex elliptic_F(Complex phi, double m) {
  Complex end = std::sin(phi);
  if (std::abs(end.imag()) <= 1e-14 * std::max(1.0, std::abs(end))) end = Complex(end.real(), 0.0);
  const Complex path[] = {0.0, end};
  return elliptic_F_along(path, m);
}

Complex elliptic_F_along(std::span<const Complex> t_path, double m) {
  if (t_path.size() < 2) return 0.0;
  const auto sing = f_singularities(m);
  const Complex value = quad::integrate_path(f_integrand(m), t_path, sing);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw DomainError("elliptic_F: integration path runs into a singularity");
  }
  return value;
}

Complex arcsin_real(double x) {
  if (std::abs(x) <= 1.0) return std::asin(x);
  const double half_pi = 0.5 * constants::pi;
  if (x > 1.0) return {half_pi, -std::acosh(x)};
  return {-half_pi, std::acosh(-x)};
}

}  // namespace lcp
