#include <cmath>

#include "lcp/capacity.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/kernels.hpp"

namespace lcp::cap {

namespace {

// Disk -> upper half-plane with 0 -> a, the inverse of
// u -> (u - a) / (u - conj(a)). Returns false at the pole zeta = 1.
bool disk_to_half_plane(Complex a, Complex zeta, Complex& u) {
  const Complex den = 1.0 - zeta;
  if (std::abs(den) < 1e-14) return false;
  u = (a - std::conj(a) * zeta) / den;
  return true;
}

}  // namespace

FigureGeometry figure_geometry(const Triangle& tri, Complex center, int n_circles, int n_rays, int samples,
                               bool parallel) {
  if (tri.signed_distance(center) <= 0.0) throw DomainError("figure_geometry: center is not inside the triangle");

  kernels::DiskMap g;
  std::optional<sc::SCMap> map;
  const auto shape = detect_exact_shape(tri);
  if (shape) {
    const Similarity s = shape->chart_to_tri;
    const Complex c = s.invert(center);
    if (shape->shape == ExactShape::IsoRight) {
      const Complex a = exact::map_phi(c);
      g = [s, a](Complex zeta) {
        Complex u;
        return s.apply(disk_to_half_plane(a, zeta, u) ? exact::map_phi_inv(u) : kI);
      };
    } else {
      const Complex a = exact::theta_306090(c);
      const Complex top = exact::triangle_306090().triangle.vertex(2);
      g = [s, a, top](Complex zeta) {
        Complex u;
        return s.apply(disk_to_half_plane(a, zeta, u) ? exact::theta_306090_inv(u) : top);
      };
    }
  } else {
    map = sc::SCMap::build(tri);
    const Complex zc = map->invert(center).preimage;
    const sc::SCMap* m = &*map;
    g = [m, zc](Complex zeta) {
      Complex eta = sc::SCMap::moebius(zc, zeta);
      const double r = std::abs(eta);
      if (r > 1.0) eta /= r;  // round-off on the unit circle
      return m->eval(eta);
    };
  }

  kernels::CurveSet curves = parallel ? kernels::trace_parallel(g, n_circles, n_rays, samples)
                                      : kernels::trace_serial(g, n_circles, n_rays, samples);
  return {center, std::move(curves.circles), std::move(curves.rays), samples};
}

}  // namespace lcp::cap
