#pragma once

#include <cmath>
#include <numbers>

// Gamma values at rational arguments (30+ significant digits) and the
// triangle constants derived from them.
namespace lcp::constants {

inline constexpr double pi = std::numbers::pi;

inline constexpr double gamma_1_4 = 3.625609908221908311930685155867672003;
inline constexpr double gamma_1_3 = 2.678938534707747633655692940974677644;
inline constexpr double gamma_1_6 = 5.566316001780235204250096895207726111;

/// Leg-scale of the Kober isosceles right triangle: K(1/2)/sqrt(2).
inline double kappa_iso() {
  return gamma_1_4 * gamma_1_4 / (std::pow(2.0, 2.5) * std::sqrt(pi));
}

/// Short leg of the 30-60-90 triangle with vertices 0, kappa, i*sqrt(3)*kappa.
inline double kappa_306090() {
  return gamma_1_3 * gamma_1_6 / (std::pow(2.0, 5.0 / 3.0) * std::sqrt(pi));
}

/// Invariant g2 of the square lattice with half-periods 1 and i.
inline double lemniscatic_g2() {
  const double g = gamma_1_4 * gamma_1_4;
  return g * g * g * g / (256.0 * pi * pi);
}

/// Value of the Weierstrass p-function at the real half-period.
inline double lemniscatic_p_at_one() {
  const double g = gamma_1_4 * gamma_1_4;
  return g * g / (32.0 * pi);
}

/// Maximum inner radius of the unit isosceles right triangle (0, 1, i).
inline double max_inner_radius_iso() {
  return 4.0 * std::sqrt(2.0 * pi) / std::pow(3.0, 0.75) / (gamma_1_4 * gamma_1_4);
}

/// Maximum inner radius of the 30-60-90 triangle divided by its hypotenuse
/// 2*kappa_306090().
inline double max_inner_radius_306090_coefficient() {
  return std::pow(2.0, 4.0 / 3.0) * pi / std::pow(5.0, 5.0 / 12.0) /
         (gamma_1_3 * gamma_1_3 * gamma_1_3);
}

}  // namespace lcp::constants
