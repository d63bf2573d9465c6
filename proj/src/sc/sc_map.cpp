#include "lcp/sc_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcp/errors.hpp"

namespace lcp::sc {

namespace {

constexpr int kPredictorSteps = 8;
constexpr int kMaxNewton = 50;
constexpr double kBoundaryGuard = 1e-6;
// Newton starts in a vertex chart when w is this close to the vertex,
// relative to the shorter adjacent side.
constexpr double kLocalReach = 0.3;
// A disk preimage this close to a prevertex is re-solved in the vertex chart.
constexpr double kCrowded = 1e-3;

}  // namespace

SCMap::SCMap(const Triangle& tri, int nodes) : tri_(tri), nodes_(nodes) {}

SCMap SCMap::build(const Triangle& tri, int nodes) {
  if (nodes < 2) throw DomainError("SCMap::build: need at least two quadrature nodes");
  SCMap map(tri, nodes);
  const auto alpha = tri.angles_over_pi();
  for (int k = 0; k < 3; ++k) {
    map.prevertices_[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
    map.exponents_[k] = alpha[k] - 1.0;
    map.singularities_[k] = {map.prevertices_[k], map.exponents_[k]};
  }

  std::array<Complex, 3> to_prevertex{};
  for (int k = 0; k < 3; ++k) to_prevertex[k] = map.integral(0.0, map.prevertices_[k]);
  map.c_ = (tri.vertex(1) - tri.vertex(0)) / (to_prevertex[1] - to_prevertex[0]);
  map.a_ = tri.vertex(0) - map.c_ * to_prevertex[0];
  if (map.c_ == Complex(0.0, 0.0) || !std::isfinite(std::abs(map.c_))) {
    throw DomainError("SCMap::build: degenerate multiplicative constant");
  }
  map.third_residual_ = std::abs(map.a_ + map.c_ * to_prevertex[2] - tri.vertex(2));
  for (int k = 0; k < 3; ++k) {
    map.local_scale_[k] = -map.c_ * map.prevertices_[k] / alpha[k] * map.local_regular(k, 0.0);
  }
  return map;
}

Complex SCMap::integrand(Complex s, Complex anchor, Complex offset) const {
  Complex log_sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Complex factor = anchor == prevertices_[k] ? -offset / prevertices_[k] : 1.0 - s / prevertices_[k];
    log_sum += exponents_[k] * std::log(factor);
  }
  return std::exp(log_sum);
}

Complex SCMap::integral(Complex from, Complex to) const {
  quad::CompoundOptions opts;
  opts.nodes = nodes_;
  return quad::integrate_compound([this](Complex s, Complex anchor, Complex offset) { return integrand(s, anchor, offset); },
                                  from, to, singularities_, opts);
}

Complex SCMap::eval(Complex zeta) const {
  if (std::abs(zeta) > 1.0 + 1e-12) throw DomainError("SCMap::eval: point outside the closed disk");
  int nearest = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(zeta - prevertices_[k]) < std::abs(zeta - prevertices_[nearest])) nearest = k;
  }
  const double d = std::abs(zeta - prevertices_[nearest]);
  if (d == 0.0) return tri_.vertex(nearest);
  if (d < std::abs(zeta)) return tri_.vertex(nearest) + c_ * integral(prevertices_[nearest], zeta);
  return a_ + c_ * integral(0.0, zeta);
}

Complex SCMap::derivative(Complex zeta) const { return c_ * integrand(zeta, zeta, 0.0); }

Complex SCMap::local_u(int k, Complex v) const { return std::exp(std::log(v) / (exponents_[k] + 1.0)); }

bool SCMap::local_admissible(int k, Complex v) const {
  if (!(std::abs(v) > 0.0) || std::abs(std::arg(v)) >= (exponents_[k] + 1.0) * std::numbers::pi / 2.0) return false;
  const Complex u = local_u(k, v);
  return 2.0 * u.real() - std::norm(u) > 0.0;  // 1 - |zeta|^2 > 0
}

Complex SCMap::local_regular(int k, Complex u) const {
  Complex log_sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    log_sum += exponents_[j] * std::log(1.0 - prevertices_[k] * (1.0 - u) / prevertices_[j]);
  }
  return std::exp(log_sum);
}

Complex SCMap::eval_local(int k, Complex v, Complex* dfdv) const {
  const double alpha = exponents_[k] + 1.0;
  const Complex u = local_u(k, v);
  std::array<quad::Singularity, 3> sing{};
  sing[0] = {0.0, exponents_[k]};
  for (int j = 0, n = 1; j < 3; ++j)
    if (j != k) sing[n++] = {1.0 - prevertices_[j] / prevertices_[k], exponents_[j]};
  quad::CompoundOptions opts;
  opts.nodes = nodes_;
  const Complex e = exponents_[k];
  const Complex integral_u = quad::integrate_compound(
      [&](Complex t) { return std::exp(e * std::log(t)) * local_regular(k, t); }, 0.0, u, sing, opts);
  // zeta = z_k (1 - t) turns ds into -z_k dt; u^{alpha - 1} du/dv = 1 / alpha.
  if (dfdv) *dfdv = -c_ * prevertices_[k] / alpha * local_regular(k, u);
  return tri_.vertex(k) - c_ * prevertices_[k] * integral_u;
}

bool SCMap::newton_disk(Complex w, InvertResult& out) const {
  const double diam = tri_.diameter();
  // Continuation predictor: f(zeta(t)) = (1 - t) f(0) + t w.
  const Complex rate = w - a_;
  const auto velocity = [&](Complex z) { return rate / derivative(z); };
  const auto clamp_disk = [](Complex z) {
    const double r = std::abs(z);
    return r < 1.0 ? z : z * ((1.0 - 1e-12) / r);
  };
  Complex zeta = 0.0;
  const double h = 1.0 / kPredictorSteps;
  for (int i = 0; i < kPredictorSteps; ++i) {
    const Complex k1 = velocity(zeta);
    const Complex k2 = velocity(clamp_disk(zeta + 0.5 * h * k1));
    const Complex k3 = velocity(clamp_disk(zeta + 0.5 * h * k2));
    const Complex k4 = velocity(clamp_disk(zeta + h * k3));
    zeta = clamp_disk(zeta + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }

  // `out` tracks the latest iterate, also on failure, for the caller's chart choice.
  Complex residual = eval(zeta) - w;
  out = {zeta, 0, std::abs(residual), -1, zeta};
  for (int it = 1; it <= kMaxNewton; ++it) {
    Complex step = residual / derivative(zeta);
    Complex next = zeta - step;
    Complex next_res;
    for (int halvings = 0;; ++halvings) {
      if (std::abs(next) < 1.0) {
        next_res = eval(next) - w;
        if (std::abs(next_res) <= std::abs(residual) * (1.0 + 1e-6) || halvings > 40) break;
      } else if (halvings > 40) {
        return false;
      }
      step *= 0.5;
      next = zeta - step;
    }
    zeta = next;
    residual = next_res;
    const double r = std::abs(residual);
    out = {zeta, it, r, -1, zeta};
    if (r < 1e-12 * diam || std::abs(step) < 1e-15) return r <= 1e-10 * diam;
  }
  return false;
}

Complex SCMap::local_seed(int k, Complex w) const { return (w - tri_.vertex(k)) / local_scale_[k]; }

bool SCMap::newton_local(int k, Complex w, Complex v, InvertResult& out) const {
  const double diam = tri_.diameter();
  if (!local_admissible(k, v)) return false;
  Complex dfdv;
  Complex residual = eval_local(k, v, &dfdv) - w;
  for (int it = 1; it <= kMaxNewton; ++it) {
    Complex step = residual / dfdv;
    Complex next = v - step;
    Complex next_res, next_d;
    for (int halvings = 0;; ++halvings) {
      if (local_admissible(k, next)) {
        next_res = eval_local(k, next, &next_d) - w;
        if (std::abs(next_res) <= std::abs(residual) * (1.0 + 1e-6) || halvings > 40) break;
      } else if (halvings > 40) {
        return false;
      }
      step *= 0.5;
      next = v - step;
    }
    v = next;
    residual = next_res;
    dfdv = next_d;
    const double r = std::abs(residual);
    if (r < 1e-12 * diam || std::abs(step) < 1e-15 * std::abs(v)) {
      if (r > 1e-10 * diam) return false;
      out = {prevertices_[k] * (1.0 - local_u(k, v)), it, r, k, v};
      return true;
    }
  }
  return false;
}

InvertResult SCMap::invert(Complex w) const {
  const double diam = tri_.diameter();
  const double inside = tri_.signed_distance(w);
  if (inside < 0.0) throw DomainError("SCMap::invert: point outside the triangle");
  if (inside < kBoundaryGuard * diam) throw BoundaryError("SCMap::invert: point too close to the boundary");

  int k = 0;
  for (int j = 1; j < 3; ++j)
    if (std::abs(w - tri_.vertex(j)) < std::abs(w - tri_.vertex(k))) k = j;
  const auto sides = tri_.side_lengths();
  const double near = kLocalReach * std::min(sides[k], sides[(k + 2) % 3]);

  InvertResult out;
  if (std::abs(w - tri_.vertex(k)) < near && newton_local(k, w, local_seed(k, w), out)) return out;
  const bool disk_ok = newton_disk(w, out);
  // A disk solution crowded against a prevertex (a long thin wedge) carries
  // |zeta - z_j| with absolute precision only; redo it in that vertex chart.
  int j = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(out.preimage - prevertices_[i]) < std::abs(out.preimage - prevertices_[j])) j = i;
  const Complex gap = 1.0 - out.preimage / prevertices_[j];
  if (disk_ok && (std::abs(gap) > kCrowded || out.residual < 1e-12 * diam)) return out;
  InvertResult local;
  if (std::abs(gap) > 0.0 && std::abs(gap) <= kCrowded &&
      newton_local(j, w, std::exp((exponents_[j] + 1.0) * std::log(gap)), local) &&
      (!disk_ok || local.residual < out.residual))
    return local;
  if (disk_ok) return out;
  if (newton_local(k, w, local_seed(k, w), out)) return out;
  throw ConvergenceError("SCMap::invert: Newton iteration did not converge");
}

InnerRadiusEval SCMap::inner_radius(Complex w) const {
  const InvertResult inv = invert(w);
  double radius;
  if (inv.chart < 0) {
    radius = std::abs(derivative(inv.preimage)) * (1.0 - std::norm(inv.preimage));
  } else {
    // f'(zeta) = C u^{alpha - 1} g(u) and 1 - |zeta|^2 = 2 Re u - |u|^2, both free of cancellation.
    const int k = inv.chart;
    const Complex u = local_u(k, inv.local);
    const Complex fp = c_ * std::exp(exponents_[k] * std::log(u)) * local_regular(k, u);
    radius = std::abs(fp) * (2.0 * u.real() - std::norm(u));
  }
  return {w, inv.preimage, radius, inv.newton_iters, inv.residual};
}

}  // namespace lcp::sc
