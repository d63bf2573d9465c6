#include <cmath>

#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/hypergeometric.hpp"

namespace lcp::exact {

namespace {

// Rejects points below the real axis and snaps round-off onto its upper side.
Complex upper_half_plane(Complex zeta, const char* what) {
  if (zeta.imag() < -1e-12 * std::max(1.0, std::abs(zeta))) {
    throw DomainError(std::string(what) + ": argument below the real axis");
  }
  if (!(zeta.imag() > 0.0)) zeta.imag(0.0);
  return zeta;
}

}  // namespace

Complex map_psi(Complex z) {
  require_in_closure(iso_right_unit(), z, "map_psi");
  if (std::abs(z) < 1e-12) throw PoleError("map_psi: pole at the vertex 0");
  const Complex p = weierstrass_p(z);
  const double p1 = constants::lemniscatic_p_at_one();
  const Complex d = p - p1;
  return -d * d / (4.0 * p1 * p);
}

Complex map_phi(Complex z) {
  require_in_closure(iso_right_unit(), z, "map_phi");
  if (std::abs(z - kI) < 1e-12) throw PoleError("map_phi: pole at the vertex i");
  return 1.0 / std::conj(map_psi(kI * std::conj(z)));
}

Complex map_phi_inv(Complex zeta) {
  zeta = upper_half_plane(zeta, "map_phi_inv");
  // 1 / B(1/2, 1/4) = sqrt(2 pi) / Gamma(1/4)^2
  const double g = constants::gamma_1_4;
  return std::sqrt(2.0 * constants::pi) / (g * g) * incomplete_beta(zeta, 0.5, 0.25);
}

Complex map_psi_inv(Complex zeta) {
  zeta = upper_half_plane(zeta, "map_psi_inv");
  // 1 / B(1/4, 1/4) = sqrt(pi) / Gamma(1/4)^2
  const double g = constants::gamma_1_4;
  return 1.0 + Complex(-1.0, 1.0) * std::sqrt(constants::pi) / (g * g) * incomplete_beta(zeta, 0.25, 0.25);
}

}  // namespace lcp::exact
