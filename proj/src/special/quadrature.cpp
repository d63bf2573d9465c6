#include "lcp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "lcp/errors.hpp"

namespace lcp::quad {

namespace {

struct JacobiEval {
  double p;      // P_n(x)
  double dp;     // P_n'(x)
};

// Jacobi polynomial P_n^{(alpha,beta)} and its derivative by the three-term
// recurrence. Valid for |x| < 1.
JacobiEval jacobi_poly(int n, double alpha, double beta, double x) {
  const double ab = alpha + beta;
  double p0 = 1.0;
  double p1 = 0.5 * (alpha - beta + (ab + 2.0) * x);
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (c - 2.0);
    const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c;
    const double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
    p0 = p1;
    p1 = p2;
  }
  const double c = 2.0 * n + ab;
  const double dp = (n * (alpha - beta - c * x) * p1 + 2.0 * (n + alpha) * (n + beta) * p0) /
                    (c * (1.0 - x) * (1.0 + x));
  return {p1, dp};
}

}  // namespace

GaussJacobiRule make_gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("make_gauss_jacobi: n must be positive");
  if (alpha <= -1.0 || beta <= -1.0) throw DomainError("make_gauss_jacobi: exponents must exceed -1");

  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double c = 2.0 * k + ab;
    diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (c * (c + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (c * c * (c + 1.0) * (c - 1.0));
    }
    sub(k - 1) = std::sqrt(b2);
  }

  std::vector<double> x(n);
  if (n == 1) {
    x[0] = diag(0);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);
    for (int i = 0; i < n; ++i) x[i] = solver.eigenvalues()(i);
  }

  // Christoffel numbers up to a common factor; the factor is fixed by the
  // zeroth moment 2^{a+b+1} B(a+1, b+1), which avoids the cancellation of
  // large log-gamma values in the closed-form prefactor.
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  GaussJacobiRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double xi = std::clamp(x[i], -1.0 + 1e-300, 1.0 - 1e-300);
    JacobiEval e{};
    for (int it = 0; it < 3; ++it) {
      e = jacobi_poly(n, alpha, beta, xi);
      const double step = e.p / e.dp;
      const double next = xi - step;
      if (!(std::abs(next) < 1.0)) break;
      xi = next;
      if (std::abs(step) < 1e-16) break;
    }
    e = jacobi_poly(n, alpha, beta, xi);
    rule.nodes[i] = xi;
    rule.weights[i] = 1.0 / ((1.0 - xi) * (1.0 + xi) * e.dp * e.dp);
  }
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w *= mu0 / total;
  return rule;
}

std::shared_ptr<const GaussJacobiRule> gauss_jacobi(int n, double alpha, double beta) {
  using Key = std::tuple<int, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const GaussJacobiRule>> cache;

  const Key key{n, alpha, beta};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussJacobiRule>(make_gauss_jacobi(n, alpha, beta));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

namespace {

bool on_real_axis(Complex a, Complex b) { return a.imag() == 0.0 && b.imag() == 0.0; }

// Imaginary part (+0 or -0) used for nodes of a real-axis segment ending at b.
double axis_side(Complex b) { return std::signbit(b.imag()) ? -0.0 : 0.0; }

AnchoredIntegrand anchored(const Integrand& f) {
  return [&f](Complex s, Complex, Complex) { return f(s); };
}

Complex panel(const AnchoredIntegrand& f, Complex a, Complex b, const GaussJacobiRule& rule) {
  const bool axis = on_real_axis(a, b);
  const double side = axis_side(b);
  const Complex half = 0.5 * (b - a);
  Complex sum = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    // 1 + x and 1 - x are exact for the nodes near the respective end
    const bool from_b = rule.alpha != 0.0 && (rule.beta == 0.0 || x > 0.0);
    const Complex anchor = from_b ? b : a;
    const Complex offset = from_b ? -half * (1.0 - x) : half * (1.0 + x);
    Complex s = anchor + offset;
    if (axis) s = Complex(s.real(), side);
    double w = rule.weights[i];
    if (rule.alpha != 0.0) w /= std::pow(1.0 - x, rule.alpha);
    if (rule.beta != 0.0) w /= std::pow(1.0 + x, rule.beta);
    sum += w * f(s, anchor, offset);
  }
  return sum * half;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
  return std::abs(a + t * d - p);
}

class Compound {
 public:
  Compound(const AnchoredIntegrand& f, std::span<const Singularity> sing, const CompoundOptions& opts, double scale,
           bool axis, double side)
      : f_(f), sing_(sing), opts_(opts), eps_(1e-13 * scale), axis_(axis), side_(side) {}

  Complex run(Complex a, Complex b, double ea, double eb, int depth) const {
    const double len = std::abs(b - a);
    if (len == 0.0) return 0.0;
    double dmin = std::numeric_limits<double>::infinity();
    for (const auto& s : sing_) {
      if (std::abs(s.point - a) <= eps_ || std::abs(s.point - b) <= eps_) continue;
      dmin = std::min(dmin, distance_to_segment(s.point, a, b));
    }
    if (dmin >= opts_.separation * len || depth >= opts_.max_depth) {
      return panel(f_, a, b, *gauss_jacobi(opts_.nodes, eb, ea));
    }
    Complex mid = 0.5 * (a + b);
    if (axis_) mid = Complex(mid.real(), side_);
    return run(a, mid, ea, 0.0, depth + 1) + run(mid, b, 0.0, eb, depth + 1);
  }

 private:
  const AnchoredIntegrand& f_;
  std::span<const Singularity> sing_;
  const CompoundOptions& opts_;
  double eps_;
  bool axis_;
  double side_;
};

}  // namespace

Complex integrate_panel(const Integrand& f, Complex a, Complex b, const GaussJacobiRule& rule) {
  return panel(anchored(f), a, b, rule);
}

Complex integrate_compound(const Integrand& f, Complex a, Complex b, std::span<const Singularity> singularities,
                           const CompoundOptions& opts) {
  return integrate_compound(anchored(f), a, b, singularities, opts);
}

Complex integrate_compound(const AnchoredIntegrand& f, Complex a, Complex b,
                           std::span<const Singularity> singularities, const CompoundOptions& opts) {
  const Complex d = b - a;
  const double len = std::abs(d);
  if (len == 0.0) return 0.0;
  const bool axis = on_real_axis(a, b);
  const double side = axis_side(b);
  const double scale = std::max({std::abs(a), std::abs(b), 1.0});
  const double eps = 1e-13 * scale;

  // Break points: singularities lying on the segment, as parameters in [0, 1].
  struct Break {
    double t;
    Complex point;
    double exponent;
  };
  std::vector<Break> breaks{{0.0, a, 0.0}, {1.0, b, 0.0}};
  for (const auto& s : singularities) {
    const double t = ((s.point - a) * std::conj(d)).real() / (len * len);
    if (t < -eps / len || t > 1.0 + eps / len) continue;
    if (distance_to_segment(s.point, a, b) > eps) continue;
    if (std::abs(s.point - a) <= eps) {
      breaks.front().exponent += s.exponent;
    } else if (std::abs(s.point - b) <= eps) {
      breaks.back().exponent += s.exponent;
    } else {
      Complex p = s.point;
      if (axis) p = Complex(p.real(), side);
      breaks.push_back({t, p, s.exponent});
    }
  }
  std::sort(breaks.begin(), breaks.end(), [](const Break& x, const Break& y) { return x.t < y.t; });
  for (std::size_t i = 1; i + 1 < breaks.size(); ++i) {
    if (breaks[i].exponent <= -1.0) throw DomainError("integrate_compound: path passes through a non-integrable singularity");
  }

  const Compound rec(f, singularities, opts, scale, axis, side);
  Complex sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    sum += rec.run(breaks[i].point, breaks[i + 1].point, breaks[i].exponent, breaks[i + 1].exponent, 0);
  }
  return sum;
}

AdaptiveResult integrate_adaptive(const Integrand& f, Complex a, Complex b,
                                  std::span<const Singularity> singularities, double rel_tol, int n0,
                                  int n_max) {
  return integrate_adaptive(anchored(f), a, b, singularities, rel_tol, n0, n_max);
}

AdaptiveResult integrate_adaptive(const AnchoredIntegrand& f, Complex a, Complex b,
                                  std::span<const Singularity> singularities, double rel_tol, int n0,
                                  int n_max) {
  CompoundOptions opts;
  opts.nodes = n0;
  Complex prev = integrate_compound(f, a, b, singularities, opts);
  AdaptiveResult out{prev, n0, std::numeric_limits<double>::infinity()};
  while (opts.nodes * 2 <= n_max) {
    opts.nodes *= 2;
    const Complex cur = integrate_compound(f, a, b, singularities, opts);
    out = {cur, opts.nodes, std::abs(cur - prev)};
    if (out.change <= rel_tol * std::abs(cur)) break;
    prev = cur;
  }
  return out;
}

Complex integrate_path(const Integrand& f, std::span<const Complex> waypoints,
                       std::span<const Singularity> singularities, double rel_tol) {
  return integrate_path(anchored(f), waypoints, singularities, rel_tol);
}

Complex integrate_path(const AnchoredIntegrand& f, std::span<const Complex> waypoints,
                       std::span<const Singularity> singularities, double rel_tol) {
  Complex sum = 0.0;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    sum += integrate_adaptive(f, waypoints[i], waypoints[i + 1], singularities, rel_tol).value;
  }
  return sum;
}

}  // namespace lcp::quad
