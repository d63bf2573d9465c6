#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lcp/errors.hpp"
#include "lcp/optimizer.hpp"

namespace lcp::opt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vertex {
  std::array<double, 2> u;  // (b1, b2); b3 = 1 - b1 - b2
  double f;
};

class Objective {
 public:
  Objective(const RadiusFn& radius, const Triangle& tri, double margin)
      : radius_(radius), tri_(tri), margin_(margin) {}

  Complex to_point(const std::array<double, 2>& u) const {
    return tri_.point({u[0], u[1], 1.0 - u[0] - u[1]});
  }

  /// -log r, or +inf outside the admissible region.
  double at(Complex p) {
    if (tri_.signed_distance(p) < margin_) return kInf;
    ++evals;
    try {
      const double r = radius_(p);
      return r > 0.0 && std::isfinite(r) ? -std::log(r) : kInf;
    } catch (const Error&) {
      return kInf;
    }
  }
  double at(const std::array<double, 2>& u) { return at(to_point(u)); }

  int evals = 0;

 private:
  const RadiusFn& radius_;
  const Triangle& tri_;
  double margin_;
};

// Newton step on a quadratic model of F = -log r around p. Gradient from
// the 5-point stencil along each axis, Hessian from the 3-point stencil and
// a 4-point mixed difference.
struct PolishStep {
  Complex next;
  bool ok = false;
};

PolishStep newton_step(Objective& obj, Complex p, double f0, double h) {
  const Complex ex{h, 0.0};
  const Complex ey{0.0, h};
  auto line = [&](Complex e, double& g, double& hess) {
    const double fp1 = obj.at(p + e), fm1 = obj.at(p - e);
    const double fp2 = obj.at(p + 2.0 * e), fm2 = obj.at(p - 2.0 * e);
    g = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
    hess = (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
  };
  double gx, gy, hxx, hyy;
  line(ex, gx, hxx);
  line(ey, gy, hyy);
  const double hxy = (obj.at(p + ex + ey) - obj.at(p + ex - ey) - obj.at(p - ex + ey) + obj.at(p - ex - ey)) / (4.0 * h * h);
  const double det = hxx * hyy - hxy * hxy;
  if (!std::isfinite(gx + gy + det) || hxx <= 0.0 || det <= 0.0) return {p, false};
  const double dx = -(hyy * gx - hxy * gy) / det;
  const double dy = -(hxx * gy - hxy * gx) / det;
  return {p + Complex(dx, dy), true};
}

double spread(const std::array<Vertex, 3>& s) { return s[2].f - s[0].f; }

double simplex_diameter(const Objective& obj, const std::array<Vertex, 3>& s) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) d = std::max(d, std::abs(obj.to_point(s[i].u) - obj.to_point(s[j].u)));
  return d;
}

}  // namespace

Optimum maximize_inner_radius(const RadiusFn& radius, const Triangle& tri, const OptimizerConfig& cfg) {
  if (!(cfg.tol_x > 0.0 && cfg.tol_f > 0.0 && cfg.penalty_margin > 0.0 && cfg.max_evals > 0)) {
    throw DomainError("maximize_inner_radius: tolerances and budget must be positive");
  }
  const double diam = tri.diameter();
  Objective obj(radius, tri, cfg.penalty_margin * diam);

  const std::array<double, 2> seed{cfg.seed.b1, cfg.seed.b2};
  if (!(cfg.seed.b1 > 0 && cfg.seed.b2 > 0 && cfg.seed.b3 > 0)) {
    throw DomainError("maximize_inner_radius: seed must be strictly interior");
  }
  // Regular simplex with the seed as centroid, shrunk until it fits.
  double edge = cfg.initial_edge;
  std::array<Vertex, 3> s{};
  for (;;) {
    const double r = edge / std::sqrt(3.0);
    bool finite = true;
    for (int k = 0; k < 3; ++k) {
      const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k / 3.0;
      s[k].u = {seed[0] + r * std::cos(a), seed[1] + r * std::sin(a)};
      s[k].f = obj.at(s[k].u);
      finite = finite && std::isfinite(s[k].f);
    }
    if (finite) break;
    edge *= 0.5;
    if (edge < 1e-8) throw DomainError("maximize_inner_radius: no admissible simplex around the seed");
  }

  auto order = [&] { std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; }); };
  auto combine = [](const std::array<double, 2>& c, const std::array<double, 2>& w, double t) {
    return std::array<double, 2>{c[0] + t * (w[0] - c[0]), c[1] + t * (w[1] - c[1])};
  };

  bool converged = false;
  order();
  while (obj.evals < cfg.max_evals) {
    const double d = simplex_diameter(obj, s);
    if (d < cfg.tol_x * diam) {
      converged = true;
      break;
    }
    // Value spread at the noise floor: the simplex cannot resolve more.
    if (spread(s) <= cfg.tol_f * std::max(1.0, std::abs(s[0].f)) && d < 1e-4 * diam) {
      converged = true;
      break;
    }
    const std::array<double, 2> c{(s[0].u[0] + s[1].u[0]) / 2.0, (s[0].u[1] + s[1].u[1]) / 2.0};
    const Vertex r{combine(c, s[2].u, -1.0), 0.0};
    const double fr = obj.at(r.u);
    if (fr < s[0].f) {
      const auto e = combine(c, s[2].u, -2.0);
      const double fe = obj.at(e);
      s[2] = fe < fr ? Vertex{e, fe} : Vertex{r.u, fr};
    } else if (fr < s[1].f) {
      s[2] = {r.u, fr};
    } else {
      const bool outside = fr < s[2].f;
      const auto k = combine(c, outside ? r.u : s[2].u, 0.5);
      const double fk = obj.at(k);
      if (fk < (outside ? fr : s[2].f)) {
        s[2] = {k, fk};
      } else {
        for (int i = 1; i < 3; ++i) {
          s[i].u = combine(s[0].u, s[i].u, 0.5);
          s[i].f = obj.at(s[i].u);
        }
      }
    }
    order();
  }

  Optimum out;
  out.simplex_diameter_final = simplex_diameter(obj, s);
  out.converged = converged;
  Complex p = obj.to_point(s[0].u);
  double f = s[0].f;
  out.step_final = out.simplex_diameter_final;

  if (cfg.polish && std::isfinite(f)) {
    for (int it = 0; it < 3; ++it) {
      const double room = tri.signed_distance(p) - cfg.penalty_margin * diam;
      const double h = std::min(2e-4 * diam, room / 4.0);
      if (!(h > 0.0)) break;
      const PolishStep step = newton_step(obj, p, f, h);
      if (!step.ok) break;
      const double len = std::abs(step.next - p);
      // Trust region: the quadratic model is only meaningful near the simplex.
      if (len > std::max(10.0 * out.simplex_diameter_final, 10.0 * h)) break;
      const double fn = obj.at(step.next);
      if (!std::isfinite(fn) || fn > f + 1e-13 * std::max(1.0, std::abs(f))) break;
      p = step.next;
      f = fn;
      out.step_final = len;
      if (len < 1e-14 * diam) break;
    }
  }

  out.point = p;
  out.value = std::exp(-f);
  out.evals = obj.evals;
  return out;
}

}  // namespace lcp::opt
