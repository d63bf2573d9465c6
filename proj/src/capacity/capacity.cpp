#include <cmath>

#include "lcp/capacity.hpp"
#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"

namespace lcp::cap {

namespace {

constexpr double kExactRoundoff = 1e-13;

void fill_geometry(CapacityReport& r) {
  r.barycentric = r.triangle.barycentric(r.point);
  r.distance_to_shortest_side = r.triangle.distance_to_side(r.point, shortest_side(r.triangle));
}

}  // namespace

CapacityReport radius_at(const Triangle& tri, Complex w, Backend backend) {
  const double inside = tri.signed_distance(w);
  if (inside <= 0.0) throw DomainError("radius_at: point is not inside the triangle");
  const RadiusEngine engine(tri, backend);

  CapacityReport r(tri);
  r.backend = engine.backend();
  r.query = Query::RadiusAt;
  r.point = w;
  r.evals = 1;
  if (const sc::SCMap* map = engine.sc_map()) {
    const sc::InnerRadiusEval e = map->inner_radius(w);
    r.inner_radius = e.radius;
    r.tolerance_achieved = e.residual;
  } else {
    r.inner_radius = engine(w);
    r.tolerance_achieved = kExactRoundoff * tri.diameter();
  }
  fill_geometry(r);
  return r;
}

CapacityReport least_capacity_point(const Triangle& tri, Backend backend, const opt::OptimizerConfig& cfg) {
  const RadiusEngine engine(tri, backend);
  const opt::Optimum o = opt::maximize_inner_radius(std::cref(engine), tri, cfg);

  CapacityReport r(tri);
  r.backend = engine.backend();
  r.query = Query::LeastCapacityPoint;
  r.evals = o.evals;
  r.converged = o.converged;
  r.point = o.point;
  r.inner_radius = o.value;
  r.tolerance_achieved = o.step_final;

  if (r.backend == Backend::SigmaExact || r.backend == Backend::JacobiExact) {
    const Similarity& s = engine.shape()->chart_to_tri;
    Complex unit_point;
    if (r.backend == Backend::SigmaExact) {
      const double t0 = exact::t0_closed_form();
      unit_point = Complex(t0, t0);
    } else {
      unit_point = exact::unit_to_kober().invert(Complex(0.0, exact::solve_axis_critical()));
    }
    r.point = s.apply(unit_point);
    r.inner_radius = s.ratio() * constants::max_inner_radius_iso();
    r.tolerance_achieved = std::abs(o.point - r.point);
    r.converged = o.converged && r.tolerance_achieved <= 1e-8 * tri.diameter();
  }
  fill_geometry(r);
  return r;
}

}  // namespace lcp::cap
