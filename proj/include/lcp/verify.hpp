#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lcp/capacity.hpp"
#include "lcp/types.hpp"

namespace lcp::verify {

// ------------------------------------------------------------- oracles ---
// Brute-force references that share no code path with the engines they check.

/// sigma(z) for the lattice {2m + 2ni} from the Weierstrass product truncated
/// to the disk |lambda| <= radius. Error ~1e-10 at |z| <= 2 for radius 400.
Complex sigma_lattice_product(Complex z, double radius = 400.0);

/// K(m) by the trapezoid rule on the periodic integrand 1/sqrt(1 - m sin^2 t).
double elliptic_K_trapezoid(double m, int n = 400);

/// Fourth-order central difference of f at z in direction 1 (complex step h).
template <class F>
Complex central_difference(const F& f, Complex z, double h) {
  return (8.0 * (f(z + h) - f(z - h)) - (f(z + 2.0 * h) - f(z - 2.0 * h))) / (12.0 * h);
}

/// Angle in degrees between the tangents of two sampled curves at fractional
/// sample positions, using cubic interpolation of the samples.
double crossing_angle_deg(const std::vector<Complex>& a, double ia, bool a_closed,
                          const std::vector<Complex>& b, double ib, bool b_closed);

/// Even-odd point-in-polygon test; the polygon need not repeat its first point.
bool inside_polygon(const std::vector<Complex>& poly, Complex p);

/// Problems found in a figure: outer circle off the boundary, points outside,
/// broken nesting, non-orthogonal crossings. Empty when all pass.
struct FigureAudit {
  double outer_gap = 0.0;        // max distance of the outer circle from the boundary / diameter
  double outside = 0.0;          // max distance outside the triangle / diameter
  int nesting_violations = 0;
  double worst_angle_error = 0.0;  // degrees away from 90
};
FigureAudit audit_figure(const Triangle& tri, const cap::FigureGeometry& fig);

// --------------------------------------------------------------- suite ---

struct Check {
  std::string name;
  double error = 0.0;  // |computed - expected| or the residual
  double tol = 0.0;
  bool pass = false;
};

struct Row {
  int id = 0;
  std::vector<std::string> tags;
  std::string title;
  std::vector<Check> checks;
  std::string error;  // exception text if the row threw
  double seconds = 0.0;
  bool pass() const;
};

struct SuiteOptions {
  std::vector<std::string> only;     // row ids ("3", "C3") or tags; empty = all
  std::optional<double> tol;         // replaces every value tolerance (not counts or angles)
  bool concurrent = true;
};

/// Tags accepted by SuiteOptions::only.
std::vector<std::string> known_tags();

std::vector<Row> run_suite(const SuiteOptions& opts = {});

/// One line per row: "C<id> PASS|FAIL <title>  worst <err>/<tol>".
void print_rows(std::ostream& os, const std::vector<Row>& rows, bool details = false);

}  // namespace lcp::verify
