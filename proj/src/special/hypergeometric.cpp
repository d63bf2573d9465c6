#include "lcp/hypergeometric.hpp"

#include <cmath>

#include "lcp/errors.hpp"
#include "lcp/quadrature.hpp"

namespace lcp {

namespace {

// `accurate` with the signed zero of `direct` on the real axis, so branch
// cuts are approached from the side the quadrature samples.
Complex same_side(Complex direct, Complex accurate) {
  return direct.imag() == 0.0 ? Complex(accurate.real(), direct.imag()) : accurate;
}

bool is_nonpositive_integer(double c) { return c <= 0.0 && c == std::round(c); }

Complex series_2f1(double a, double b, double c, Complex z) {
  Complex sum = 1.0;
  Complex term = 1.0;
  for (int n = 0; n < 2000; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw ConvergenceError("gauss_2f1: power series did not converge");
}

}  // namespace

Complex incomplete_beta(Complex zeta, double alpha, double beta) {
  if (!(alpha > 0.0)) throw DomainError("incomplete_beta: alpha must be positive");
  if (zeta == Complex(0.0, 0.0)) return 0.0;

  const bool reaches_one = zeta.imag() == 0.0 && zeta.real() >= 1.0;
  if (reaches_one && !(beta > 0.0)) {
    throw DomainError("incomplete_beta: path meets the branch point s = 1 with beta <= 0");
  }
  const double am1 = alpha - 1.0;
  const double bm1 = beta - 1.0;
  const quad::AnchoredIntegrand integrand = [am1, bm1](Complex s, Complex anchor, Complex offset) {
    const Complex s0 = anchor == Complex(0.0, 0.0) ? same_side(s, offset) : s;
    const Complex s1 = anchor == Complex(1.0, 0.0) ? same_side(1.0 - s, -offset) : 1.0 - s;
    return std::exp(am1 * std::log(s0) + bm1 * std::log(s1));
  };
  const quad::Singularity sing[] = {{0.0, am1}, {1.0, bm1}};
  return quad::integrate_adaptive(integrand, 0.0, zeta, sing).value;
}

Complex gauss_2f1(double a, double b, double c, Complex z) {
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
  if (std::abs(z) <= 0.8) return series_2f1(a, b, c, z);
  if (c != a + 1.0 && c == b + 1.0) std::swap(a, b);
  if (c == a + 1.0 && a > 0.0) {
    return a * std::pow(z, -a) * incomplete_beta(z, a, 1.0 - b);
  }
  throw DomainError("gauss_2f1: unsupported parameters outside |z| <= 0.8");
}

}  // namespace lcp
