#pragma once

#include <array>

#include "lcp/types.hpp"

namespace lcp {

/// Constants of the square lattice {2m + 2ni} (half-periods 1 and i).
struct LatticeParams {
  Complex half_period_1{1.0, 0.0};
  Complex half_period_2{0.0, 1.0};
  double g2 = 0.0;
  double g3 = 0.0;
  double nome_q = 0.0;      // e^{-pi}
  double eta1 = 0.0;        // zeta(1), from theta derivatives at 0
  double theta1_prime0 = 0.0;

  /// The lemniscatic lattice used throughout; computed once.
  static const LatticeParams& lemniscatic();
};

/// theta_1(v | q) and its first three derivatives in v.
std::array<Complex, 4> theta1_derivatives(Complex v, double q);

/// Weierstrass sigma via sigma(z) = exp(eta1 z^2 / 2) theta_1(pi z / 2) / ((pi/2) theta_1'(0)).
Complex weierstrass_sigma(Complex z, const LatticeParams& lat = LatticeParams::lemniscatic());

/// Weierstrass p-function. Throws PoleError within 1e-12 of a lattice point.
Complex weierstrass_p(Complex z, const LatticeParams& lat = LatticeParams::lemniscatic());

/// Derivative of the p-function. Same pole policy as weierstrass_p.
Complex weierstrass_p_prime(Complex z, const LatticeParams& lat = LatticeParams::lemniscatic());

/// Distance from z to the nearest lattice point.
double distance_to_lattice(Complex z);

}  // namespace lcp
