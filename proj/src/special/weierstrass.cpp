#include "lcp/weierstrass.hpp"

#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"

namespace lcp {

namespace {

constexpr double kPi = constants::pi;
constexpr int kMaxThetaTerms = 40;

// Reduces z to the period cell centred at the origin.
Complex reduce_to_cell(Complex z) {
  return {z.real() - 2.0 * std::round(z.real() / 2.0), z.imag() - 2.0 * std::round(z.imag() / 2.0)};
}

void check_pole(Complex z) {
  if (distance_to_lattice(z) < 1e-12) throw PoleError("weierstrass_p: argument on a lattice point");
}

}  // namespace

std::array<Complex, 4> theta1_derivatives(Complex v, double q) {
  // theta_1(v) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) v)
  std::array<Complex, 4> d{};
  for (int n = 0; n < kMaxThetaTerms; ++n) {
    const double k = 2.0 * n + 1.0;
    const double c = ((n % 2 == 0) ? 2.0 : -2.0) * std::pow(q, (n + 0.5) * (n + 0.5));
    const Complex s = std::sin(k * v);
    const Complex co = std::cos(k * v);
    const std::array<Complex, 4> term{c * s, c * k * co, -c * k * k * s, -c * k * k * k * co};
    for (int j = 0; j < 4; ++j) d[j] += term[j];
    // Terms decay once (2n+1)|Im v| is dominated by the q^{n^2} factor.
    if (n > 2 && std::abs(term[0]) + std::abs(term[1]) <= 1e-18 * (std::abs(d[0]) + std::abs(d[1])) &&
        k > std::abs(v.imag()) / kPi) {
      break;
    }
  }
  return d;
}

const LatticeParams& LatticeParams::lemniscatic() {
  static const LatticeParams params = [] {
    LatticeParams p;
    p.nome_q = std::exp(-kPi);
    const auto d = theta1_derivatives(0.0, p.nome_q);
    p.theta1_prime0 = d[1].real();
    // eta1 = -(pi^2 / 12) theta_1'''(0) / theta_1'(0) for omega1 = 1
    p.eta1 = -(kPi * kPi / 12.0) * d[3].real() / d[1].real();
    p.g2 = constants::lemniscatic_g2();
    p.g3 = 0.0;
    return p;
  }();
  return params;
}

double distance_to_lattice(Complex z) { return std::abs(reduce_to_cell(z)); }

Complex weierstrass_sigma(Complex z, const LatticeParams& lat) {
  const Complex v = 0.5 * kPi * z;
  const auto d = theta1_derivatives(v, lat.nome_q);
  return std::exp(0.5 * lat.eta1 * z * z) * d[0] / (0.5 * kPi * lat.theta1_prime0);
}

Complex weierstrass_p(Complex z, const LatticeParams& lat) {
  check_pole(z);
  const Complex zr = reduce_to_cell(z);
  const auto d = theta1_derivatives(0.5 * kPi * zr, lat.nome_q);
  const Complex l1 = d[1] / d[0];
  const Complex l2 = d[2] / d[0] - l1 * l1;  // (log theta_1)''
  return -lat.eta1 - 0.25 * kPi * kPi * l2;
}

Complex weierstrass_p_prime(Complex z, const LatticeParams& lat) {
  check_pole(z);
  const Complex zr = reduce_to_cell(z);
  const auto d = theta1_derivatives(0.5 * kPi * zr, lat.nome_q);
  const Complex r1 = d[1] / d[0];
  const Complex r2 = d[2] / d[0];
  const Complex r3 = d[3] / d[0];
  const Complex l3 = r3 - 3.0 * r1 * r2 + 2.0 * r1 * r1 * r1;  // (log theta_1)'''
  const double c = 0.5 * kPi;
  return -c * c * c * l3;
}

}  // namespace lcp
