#include <algorithm>
#include <cmath>

#include "lcp/capacity.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"

namespace lcp::cap {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Auto: return "auto";
    case Backend::SigmaExact: return "sigma";
    case Backend::JacobiExact: return "jacobi";
    case Backend::Exact306090: return "exact-30-60-90";
    case Backend::SchwarzChristoffel: return "sc";
  }
  return "unknown";
}

std::string_view to_string(Query q) {
  return q == Query::RadiusAt ? "radius_at" : "least_capacity_point";
}

std::optional<ShapeMatch> detect_exact_shape(const Triangle& tri, double tol) {
  const auto a = tri.angles_over_pi();
  int right = -1;
  for (int k = 0; k < 3; ++k)
    if (std::abs(a[k] - 0.5) <= tol) right = k;
  if (right < 0) return std::nullopt;

  const Complex v0 = tri.vertex(right);
  const Complex v1 = tri.vertex((right + 1) % 3);
  const Complex v2 = tri.vertex((right + 2) % 3);
  const double a1 = a[(right + 1) % 3];

  if (std::abs(a1 - 0.25) <= tol) {
    // Chart 0, 1, i is counterclockwise, as is the input.
    return ShapeMatch{ExactShape::IsoRight, Similarity{v1 - v0, v0, false}};
  }
  const double k = exact::triangle_306090().kappa;
  if (std::abs(a1 - 1.0 / 3.0) <= tol) {
    return ShapeMatch{ExactShape::Triangle306090, Similarity{(v1 - v0) / k, v0, false}};
  }
  if (std::abs(a1 - 1.0 / 6.0) <= tol) {
    // The 60 degree vertex follows the 30 degree one: orientation flips.
    return ShapeMatch{ExactShape::Triangle306090, Similarity{(v2 - v0) / k, v0, true}};
  }
  return std::nullopt;
}

int shortest_side(const Triangle& tri) {
  const auto s = tri.side_lengths();
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (s[k] < s[best]) best = k;
  return best;
}

RadiusEngine::RadiusEngine(const Triangle& tri, Backend requested)
    : tri_(tri), backend_(requested), shape_(detect_exact_shape(tri)) {
  const bool iso = shape_ && shape_->shape == ExactShape::IsoRight;
  const bool t30 = shape_ && shape_->shape == ExactShape::Triangle306090;
  switch (requested) {
    case Backend::Auto:
      backend_ = iso ? Backend::SigmaExact : t30 ? Backend::Exact306090 : Backend::SchwarzChristoffel;
      break;
    case Backend::SigmaExact:
      if (!iso) throw DomainError("backend sigma needs an isosceles right triangle");
      break;
    case Backend::JacobiExact:
      if (t30) backend_ = Backend::Exact306090;
      else if (!iso) throw DomainError("backend jacobi needs an isosceles right or 30-60-90 triangle");
      break;
    case Backend::Exact306090:
      if (!t30) throw DomainError("backend exact-30-60-90 needs a 30-60-90 triangle");
      break;
    case Backend::SchwarzChristoffel:
      break;
  }
  if (backend_ == Backend::SchwarzChristoffel) map_ = sc::SCMap::build(tri_);
}

double RadiusEngine::operator()(Complex w) const {
  switch (backend_) {
    case Backend::SigmaExact: {
      const Similarity& s = shape_->chart_to_tri;
      return s.ratio() / exact::h_sigma(s.invert(w));
    }
    case Backend::JacobiExact: {
      const Similarity& s = shape_->chart_to_tri;
      const Similarity k = exact::unit_to_kober();
      return s.ratio() / k.ratio() / exact::h_theta(k.apply(s.invert(w)));
    }
    case Backend::Exact306090: {
      const Similarity& s = shape_->chart_to_tri;
      return s.ratio() / exact::h_306090(s.invert(w));
    }
    default:
      return map_->inner_radius(w).radius;
  }
}

}  // namespace lcp::cap
