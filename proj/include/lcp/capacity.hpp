#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcp/optimizer.hpp"
#include "lcp/sc_map.hpp"
#include "lcp/triangle.hpp"
#include "lcp/types.hpp"

namespace lcp::cap {

enum class Backend { Auto, SigmaExact, JacobiExact, Exact306090, SchwarzChristoffel };
enum class Query { RadiusAt, LeastCapacityPoint };

std::string_view to_string(Backend b);
std::string_view to_string(Query q);

enum class ExactShape { IsoRight, Triangle306090 };

/// A triangle recognised as similar to one of the exact charts. `chart_to_tri`
/// maps the chart (unit iso-right 0, 1, i or the 30-60-90 chart) onto it.
struct ShapeMatch {
  ExactShape shape;
  Similarity chart_to_tri;
};

/// Sorted angles compared against (1/4, 1/4, 1/2) and (1/6, 1/3, 1/2) to `tol`.
std::optional<ShapeMatch> detect_exact_shape(const Triangle& tri, double tol = 1e-9);

/// Inner radius r_w of a fixed triangle, with the engine chosen once.
/// Pure and thread-safe after construction.
class RadiusEngine {
 public:
  /// Throws DomainError if an exact backend is requested for a triangle of
  /// the wrong shape. JacobiExact on a 30-60-90 triangle resolves to Exact306090.
  RadiusEngine(const Triangle& tri, Backend requested = Backend::Auto);

  const Triangle& triangle() const { return tri_; }
  Backend backend() const { return backend_; }
  const std::optional<ShapeMatch>& shape() const { return shape_; }
  /// Non-null only for the SC backend.
  const sc::SCMap* sc_map() const { return map_ ? &*map_ : nullptr; }

  double operator()(Complex w) const;

 private:
  Triangle tri_;
  Backend backend_;
  std::optional<ShapeMatch> shape_;
  std::optional<sc::SCMap> map_;
};

struct CapacityReport {
  explicit CapacityReport(const Triangle& t) : triangle(t) {}

  Triangle triangle;
  Backend backend = Backend::Auto;
  Query query = Query::RadiusAt;
  Complex point;
  double inner_radius = 0.0;
  Barycentric barycentric;
  double distance_to_shortest_side = 0.0;
  int evals = 0;
  /// Position accuracy estimate for optimum queries; map residual (SC) or
  /// nominal round-off level (exact engines) for radius queries.
  double tolerance_achieved = 0.0;
  bool converged = true;
};

/// Index of the strictly shortest side; ties go to the lowest index.
int shortest_side(const Triangle& tri);

CapacityReport radius_at(const Triangle& tri, Complex w, Backend backend = Backend::Auto);

/// For iso-right triangles the closed-form point is reported and the
/// optimizer result is used as a cross-check (converged = false if they
/// disagree by more than 1e-8 * diameter).
CapacityReport least_capacity_point(const Triangle& tri, Backend backend = Backend::Auto,
                                    const opt::OptimizerConfig& cfg = {});

struct FigureGeometry {
  Complex center;
  std::vector<std::vector<Complex>> circle_images;
  std::vector<std::vector<Complex>> ray_images;
  int samples_per_curve = 512;
};

/// Images of |zeta| = k / n_circles and of n_rays radii under the disk map g
/// with g(0) = center. Exact shapes use the closed-form inverse composed with
/// a Moebius map; other triangles use the SC forward map.
FigureGeometry figure_geometry(const Triangle& tri, Complex center, int n_circles = 10, int n_rays = 24,
                               int samples = 512, bool parallel = true);

}  // namespace lcp::cap
