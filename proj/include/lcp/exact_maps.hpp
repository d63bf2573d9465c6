#pragma once

#include "lcp/triangle.hpp"
#include "lcp/types.hpp"
#include "lcp/weierstrass.hpp"

// Closed-form conformal maps for the two exceptional triangles.
//
// Three charts are used:
//   IsoRightUnit    vertices 0, 1, i                      (sigma and p-function maps)
//   IsoRightKober   vertices -kappa, kappa, i*kappa      (sn/dn map, kappa = K(1/2)/sqrt 2)
//   Triangle306090  vertices 0, k30, i*sqrt(3)*k30      (k30 = G(1/3)G(1/6)/(2^{5/3} sqrt pi))
//
// Every kernel h(w) satisfies 1/h(w) = inner radius of the chart at w.
namespace lcp::exact {

enum class ChartKind { IsoRightUnit, IsoRightKober, Triangle306090 };

struct TriangleChart {
  ChartKind kind;
  double kappa;        // 1 for IsoRightUnit
  Triangle triangle;
  Similarity to_unit;  // chart -> IsoRightUnit; identity for the 30-60-90 chart

  static TriangleChart make(ChartKind kind);
};

const TriangleChart& iso_right_unit();
const TriangleChart& iso_right_kober();
const TriangleChart& triangle_306090();

/// Similarity from the unit isosceles right triangle onto the Kober chart:
/// 0 -> i kappa, 1 -> -kappa, i -> kappa. Its ratio is sqrt(2) kappa.
Similarity unit_to_kober();

// ---------------------------------------------------------------- sigma ---

/// Disk map of the unit isosceles right triangle built from Weierstrass
/// sigma: zeros at +-w, +-conj(w'), poles at +-w', +-conj(w), where
/// w' = 1 + i - i conj(w) is the reflection of w across the hypotenuse.
class SigmaMapContext {
 public:
  /// Throws BoundaryError when w is within 1e-9 of the boundary.
  explicit SigmaMapContext(Complex w);

  Complex w() const { return w_; }
  Complex w_reflected() const { return w_prime_; }
  /// C_w, chosen so that f_w(1) = 1.
  Complex normalizer() const { return c_w_; }

  Complex operator()(Complex z) const;
  /// lim |f_w(z) / (z - w)| as z -> w.
  double h() const;

 private:
  Complex w_;
  Complex w_prime_;
  Complex c_w_;
};

Complex f_w_sigma(Complex z, const SigmaMapContext& ctx);
double h_sigma(Complex w);

// ------------------------------------------------------------ p-function ---

/// Map of the unit triangle onto the upper half-plane with (0, 1, i) -> (inf, 0, 1).
Complex map_psi(Complex z);
/// Map of the unit triangle onto the upper half-plane with (0, 1, i) -> (0, 1, inf).
Complex map_phi(Complex z);
/// Inverse of map_phi: B(zeta; 1/2, 1/4) / B(1/2, 1/4).
Complex map_phi_inv(Complex zeta);
/// Inverse of map_psi: 1 + (i - 1) B(zeta; 1/4, 1/4) / B(1/4, 1/4).
Complex map_psi_inv(Complex zeta);

// ---------------------------------------------------- Kober (sn, dn) map ---

/// theta(z) = sqrt 2 sn(sqrt 2 z | 1/2) dn(sqrt 2 z | 1/2) on the Kober chart,
/// (-kappa, kappa, i kappa) -> (-1, 1, inf).
Complex theta_iso(Complex z);
Complex theta_iso_derivative(Complex z);
/// (zeta / 2) 2F1(1/2, 3/4; 3/2; zeta^2) for zeta in the closed upper half-plane.
Complex theta_iso_inv(Complex zeta);

Complex f_w_theta(Complex z, Complex w);
double h_theta(Complex w);
/// h on the symmetry axis w = i y via |cn^3 / (sqrt 2 sn dn)| at i sqrt 2 y.
double h_theta_axis(double y);

/// dn(i sqrt 2 y | 1/2) - sqrt((1 + sqrt 3) / 2); its root in (0, kappa)
/// is the height of the least capacity point of the Kober chart.
double axis_critical_equation(double y);
/// Root of axis_critical_equation: bisection on [0.3 kappa, 0.5 kappa] to
/// 1e-15, then Newton polish.
double solve_axis_critical();

/// t0 = Re F(arcsin sqrt((1 + sqrt 3) / 2) | 2) / (2 kappa): the least
/// capacity point of the unit triangle is (1 + i) t0.
double t0_closed_form();

// ----------------------------------------------------------- 30-60-90 ----

/// (0, k30, i sqrt 3 k30) -> (0, 1/4, inf).
Complex theta_306090(Complex z);
Complex theta_306090_derivative(Complex z);
/// B(1/2 + sqrt(zeta); 1/3, 1/3) - k30 for zeta in the closed upper half-plane.
Complex theta_306090_inv(Complex zeta);
double h_306090(Complex w);

// ------------------------------------------------------------ helpers ----

/// Throws DomainError when z is more than 1e-9 * diameter outside the chart.
void require_in_closure(const TriangleChart& chart, Complex z, const char* what);
/// Throws BoundaryError (or DomainError outside) unless z is at least
/// 1e-9 * diameter inside the chart.
void require_interior(const TriangleChart& chart, Complex z, const char* what);

}  // namespace lcp::exact
