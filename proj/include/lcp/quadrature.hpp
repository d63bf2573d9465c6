#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "lcp/types.hpp"

namespace lcp::quad {

/// Gauss-Jacobi rule on [-1, 1] for the weight (1 - x)^alpha (1 + x)^beta.
/// alpha = beta = 0 gives Gauss-Legendre.
struct GaussJacobiRule {
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Builds an n-point rule: Golub-Welsch eigenvalues polished by Newton on the
/// three-term recurrence; weights from P_n' scaled to the exact zeroth moment.
GaussJacobiRule make_gauss_jacobi(int n, double alpha, double beta);

/// Process-wide cache over make_gauss_jacobi. Entries are immutable once
/// inserted; lookup is thread-safe.
std::shared_ptr<const GaussJacobiRule> gauss_jacobi(int n, double alpha, double beta);

/// Algebraic branch point of an integrand: near `point` the integrand
/// behaves like |s - point|^exponent times an analytic factor.
struct Singularity {
  Complex point;
  double exponent = 0.0;
};

using Integrand = std::function<Complex(Complex)>;

/// Integrand that also receives, for each node s, a panel end `anchor` and
/// the offset s - anchor formed without cancellation. The anchor is the
/// nearer end carrying a nonzero exponent (the start when neither does).
/// Near a branch point, factors such as (1 - s / p) must be built from the
/// offset: s - p computed from s loses all digits once s is within a few
/// ulps of p, while the Jacobi weight assumes the exact distance.
using AnchoredIntegrand = std::function<Complex(Complex s, Complex anchor, Complex offset)>;

/// One panel over the straight segment a -> b. The rule's beta exponent sits
/// at `a` and its alpha exponent at `b`; the integrand is divided by the
/// weight at each node, so f itself carries the singular factors.
Complex integrate_panel(const Integrand& f, Complex a, Complex b, const GaussJacobiRule& rule);

struct CompoundOptions {
  int nodes = 48;
  // A panel is accepted when every singularity not at one of its ends lies at
  // least `separation` panel lengths away from it.
  double separation = 0.5;
  int max_depth = 60;
};

/// Compound Gauss-Jacobi integral of f along the segment a -> b.
///
/// Singularities lying on the segment split it; the pieces carry their
/// exponents as Jacobi weights. Nearby singularities force bisection until
/// each panel is at least half a panel length away from them.
///
/// A segment on the real axis is sampled on the side given by the sign of
/// the zero imaginary part of `b` (+0 samples the upper-side limit, -0 the
/// lower one), so integrands built from principal-branch std::complex
/// functions pick up the matching boundary values of their cuts.
Complex integrate_compound(const Integrand& f, Complex a, Complex b,
                           std::span<const Singularity> singularities,
                           const CompoundOptions& opts = {});
Complex integrate_compound(const AnchoredIntegrand& f, Complex a, Complex b,
                           std::span<const Singularity> singularities,
                           const CompoundOptions& opts = {});

struct AdaptiveResult {
  Complex value;
  int nodes = 0;
  double change = 0.0;  // |last - previous| at termination
};

/// integrate_compound with the node count doubled from `n0` until two
/// successive results agree to `rel_tol` (relative) or `n_max` is reached.
AdaptiveResult integrate_adaptive(const Integrand& f, Complex a, Complex b,
                                  std::span<const Singularity> singularities,
                                  double rel_tol = 1e-13, int n0 = 64, int n_max = 1024);
AdaptiveResult integrate_adaptive(const AnchoredIntegrand& f, Complex a, Complex b,
                                  std::span<const Singularity> singularities,
                                  double rel_tol = 1e-13, int n0 = 64, int n_max = 1024);

/// Straight-segment path through successive waypoints.
Complex integrate_path(const Integrand& f, std::span<const Complex> waypoints,
                       std::span<const Singularity> singularities,
                       double rel_tol = 1e-13);
Complex integrate_path(const AnchoredIntegrand& f, std::span<const Complex> waypoints,
                       std::span<const Singularity> singularities,
                       double rel_tol = 1e-13);

}  // namespace lcp::quad
