#pragma once

#include <array>
#include <memory>

#include "lcp/quadrature.hpp"
#include "lcp/triangle.hpp"
#include "lcp/types.hpp"

namespace lcp::sc {

/// Result of an inner-radius query on a Schwarz-Christoffel map.
struct InnerRadiusEval {
  Complex point;      // query point in the triangle
  Complex preimage;   // its preimage in the unit disk
  double radius = 0;  // |f'(preimage)| (1 - |preimage|^2)
  int newton_iters = 0;
  double residual = 0;  // |f(preimage) - point|
};

struct InvertResult {
  Complex preimage;
  int newton_iters = 0;
  double residual = 0;
  /// -1 when Newton ran on zeta itself; k when it ran in the local
  /// coordinate v of prevertex k, zeta = z_k (1 - v^{1/alpha_k}).
  int chart = -1;
  Complex local;
};

/// Disk -> triangle map
///   f(zeta) = A + C * integral_0^zeta prod_k (1 - s / z_k)^{alpha_k - 1} ds
/// with prevertices z_k fixed at the cube roots of unity. For a triangle the
/// three prevertices use up the Moebius freedom, so no parameter problem is
/// solved: A and C are fixed by f(z_1) = v_1, f(z_2) = v_2 and the third
/// vertex lands by the angle condition.
///
/// Immutable after build(); every member function is safe to call
/// concurrently.
class SCMap {
 public:
  /// `nodes` is the Gauss-Jacobi node count per compound panel.
  static SCMap build(const Triangle& tri, int nodes = 48);

  const Triangle& triangle() const { return tri_; }
  const std::array<Complex, 3>& prevertices() const { return prevertices_; }
  Complex constant() const { return c_; }
  Complex translation() const { return a_; }
  /// |f(z_3) - v_3| after construction.
  double third_vertex_residual() const { return third_residual_; }
  int nodes() const { return nodes_; }

  /// f(zeta) for |zeta| <= 1, integrating from the nearest prevertex when it
  /// is closer than the origin.
  Complex eval(Complex zeta) const;
  /// f'(zeta) = C prod_k (1 - zeta / z_k)^{alpha_k - 1}, |zeta| < 1.
  Complex derivative(Complex zeta) const;
  /// Solves f(zeta) = w: 8 RK4 steps of the continuation ODE
  /// dzeta/dt = (w - f(0)) / f'(zeta) from zeta = 0, then damped Newton.
  /// Near a vertex the preimage crowds against its prevertex (for a 30 degree
  /// corner, |zeta - z_k| ~ (distance / diameter)^6), so Newton runs instead
  /// in the local coordinate v, zeta = z_k (1 - v^{1/alpha_k}), where f is
  /// analytic and the offset from z_k is carried without rounding. The chart
  /// is used when w is near the vertex, or when the disk solution lands
  /// within 1e-3 of a prevertex (long thin wedges).
  /// Throws BoundaryError within 1e-6 * diameter of the boundary and
  /// ConvergenceError after 50 Newton steps.
  InvertResult invert(Complex w) const;
  /// Inner radius of the triangle relative to w.
  InnerRadiusEval inner_radius(Complex w) const;

  /// Disk automorphism eta -> (eta + c) / (1 + conj(c) eta).
  static Complex moebius(Complex c, Complex eta) { return (eta + c) / (1.0 + std::conj(c) * eta); }

 private:
  SCMap(const Triangle& tri, int nodes);
  Complex integral(Complex from, Complex to) const;
  // prod_k (1 - s / z_k)^{alpha_k - 1}; the factor of the prevertex equal to
  // `anchor` is formed from `offset` = s - anchor.
  Complex integrand(Complex s, Complex anchor, Complex offset) const;

  // Vertex-local chart k: u = v^{1/alpha_k}, zeta = z_k (1 - u).
  Complex local_u(int k, Complex v) const;
  bool local_admissible(int k, Complex v) const;
  /// Product over j != k of (1 - z_k (1 - u) / z_j)^{alpha_j - 1}.
  Complex local_regular(int k, Complex u) const;
  /// f and df/dv in chart k.
  Complex eval_local(int k, Complex v, Complex* dfdv) const;
  bool newton_disk(Complex w, InvertResult& out) const;
  Complex local_seed(int k, Complex w) const;
  bool newton_local(int k, Complex w, Complex v0, InvertResult& out) const;

  Triangle tri_;
  int nodes_;
  std::array<Complex, 3> prevertices_;
  std::array<double, 3> exponents_;  // alpha_k - 1
  std::array<quad::Singularity, 3> singularities_;
  std::array<Complex, 3> local_scale_{};  // f ~ v_k + local_scale_k * v near prevertex k
  Complex c_;
  Complex a_;
  double third_residual_ = 0.0;
};

}  // namespace lcp::sc
