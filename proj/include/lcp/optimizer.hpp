#pragma once

#include <functional>

#include "lcp/triangle.hpp"
#include "lcp/types.hpp"

namespace lcp::opt {

struct OptimizerConfig {
  double tol_x = 1e-12;           // simplex diameter, relative to the triangle diameter
  double tol_f = 1e-14;           // relative spread of -log(radius) over the simplex
  int max_evals = 2000;
  double penalty_margin = 1e-7;   // relative to the triangle diameter
  Barycentric seed{};             // centroid
  double initial_edge = 0.1;      // barycentric units
  bool polish = true;
};

struct Optimum {
  Complex point;
  double value = 0.0;  // maximal inner radius
  int evals = 0;
  bool converged = false;
  double simplex_diameter_final = 0.0;
  /// Length of the last polish step, or the final simplex diameter when the
  /// polish was skipped. A rough bound on the position error.
  double step_final = 0.0;
};

using RadiusFn = std::function<double(Complex)>;

/// Maximizes `radius` over the open triangle with Nelder-Mead on
/// -log(radius) in barycentric coordinates, followed by a Newton polish that
/// uses fourth-order central differences for the gradient.
///
/// Points closer than penalty_margin to the boundary, and points where
/// `radius` throws lcp::Error, are rejected. Deterministic.
Optimum maximize_inner_radius(const RadiusFn& radius, const Triangle& tri, const OptimizerConfig& cfg = {});

struct SegmentOptimum {
  double argmax = 0.0;
  double max = 0.0;
  int evals = 0;
};

/// Golden-section search on [a, b] down to `tol`, then up to three Newton
/// steps with finite-difference derivatives. Assumes f is unimodal; on other
/// inputs the result is some local maximum.
SegmentOptimum maximize_on_segment(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

}  // namespace lcp::opt
