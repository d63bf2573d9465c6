#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcp/errors.hpp"
#include "lcp/verify.hpp"

namespace lcp::verify {

Complex sigma_lattice_product(Complex z, double radius) {
  // The four rotations i^j lambda of a lattice point share one factor class:
  // sum_j [log(1 - u_j) + u_j + u_j^2 / 2] = -sum_k u^{4k} / k with u = z / lambda.
  // Far points use that series; near ones multiply the factors directly.
  Complex log_sum = 0.0;
  Complex near = 1.0;
  const int m_max = static_cast<int>(radius / 2.0);
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 0; n <= m_max; ++n) {
      const Complex lambda(2.0 * m, 2.0 * n);
      if (std::abs(lambda) > radius) break;
      const Complex u = z / lambda;
      if (std::abs(u) < 0.25) {
        const Complex u4 = (u * u) * (u * u);
        Complex term = u4;
        for (int k = 1; k < 40; ++k) {
          log_sum -= term / static_cast<double>(k);
          term *= u4;
          if (std::abs(term) < 1e-18) break;
        }
      } else {
        Complex rot = 1.0;
        for (int j = 0; j < 4; ++j) {
          const Complex v = u * rot;
          near *= (1.0 - v) * std::exp(v + v * v / 2.0);
          rot *= kI;
        }
      }
    }
  }
  return z * near * std::exp(log_sum);
}

double elliptic_K_trapezoid(double m, int n) {
  // The integrand is even and pi-periodic: the trapezoid rule on [0, pi/2]
  // converges geometrically.
  const double h = std::numbers::pi / 2.0 / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double st = std::sin(t);
    const double f = 1.0 / std::sqrt(1.0 - m * st * st);
    s += (i == 0 || i == n) ? f / 2.0 : f;
  }
  return s * h;
}

namespace {

Complex sample(const std::vector<Complex>& c, long i, bool closed) {
  const long n = static_cast<long>(c.size());
  if (closed) {
    const long period = n - 1;  // last sample repeats the first
    return c[((i % period) + period) % period];
  }
  return c[std::clamp(i, 0L, n - 1)];
}

// Derivative of the cubic through samples i0-1 .. i0+2 at i0 + f.
Complex tangent(const std::vector<Complex>& c, double pos, bool closed) {
  long i0 = static_cast<long>(std::floor(pos));
  if (!closed) i0 = std::clamp(i0, 1L, static_cast<long>(c.size()) - 3);
  const double f = pos - i0;
  const Complex p0 = sample(c, i0 - 1, closed), p1 = sample(c, i0, closed);
  const Complex p2 = sample(c, i0 + 1, closed), p3 = sample(c, i0 + 2, closed);
  // Lagrange basis on nodes -1, 0, 1, 2, differentiated.
  const double d0 = -(3 * f * f - 6 * f + 2) / 6.0;
  const double d1 = (3 * f * f - 4 * f - 1) / 2.0;
  const double d2 = -(3 * f * f - 2 * f - 2) / 2.0;
  const double d3 = (3 * f * f - 1) / 6.0;
  return d0 * p0 + d1 * p1 + d2 * p2 + d3 * p3;
}

double distance_to_boundary(const Triangle& tri, Complex p) { return std::abs(tri.signed_distance(p)); }

}  // namespace

double crossing_angle_deg(const std::vector<Complex>& a, double ia, bool a_closed, const std::vector<Complex>& b,
                          double ib, bool b_closed) {
  const Complex ta = tangent(a, ia, a_closed);
  const Complex tb = tangent(b, ib, b_closed);
  const double ang = std::abs(std::arg(ta / tb)) * 180.0 / std::numbers::pi;
  return ang > 90.0 ? 180.0 - ang : ang;
}

bool inside_polygon(const std::vector<Complex>& poly, Complex p) {
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex a = poly[i], b = poly[j];
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x = a.real() + (p.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (p.real() < x) in = !in;
    }
  }
  return in;
}

FigureAudit audit_figure(const Triangle& tri, const cap::FigureGeometry& fig) {
  FigureAudit out;
  const double d = tri.diameter();
  for (Complex p : fig.circle_images.back()) out.outer_gap = std::max(out.outer_gap, distance_to_boundary(tri, p) / d);
  auto outside = [&](const auto& curves) {
    for (const auto& c : curves)
      for (Complex p : c) out.outside = std::max(out.outside, -tri.signed_distance(p) / d);
  };
  outside(fig.circle_images);
  outside(fig.ray_images);

  for (std::size_t k = 1; k < fig.circle_images.size(); ++k) {
    const auto& outer = fig.circle_images[k];
    for (Complex p : fig.circle_images[k - 1])
      if (!inside_polygon(outer, p)) ++out.nesting_violations;
  }

  // Circle k and ray j cross at zeta = (k / n) exp(2 pi i j / n_rays), which
  // sits at known fractional sample positions on both curves.
  const int n = static_cast<int>(fig.circle_images.size());
  const int n_rays = static_cast<int>(fig.ray_images.size());
  const double last = fig.samples_per_curve - 1;
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < n_rays; ++j) {
      const double on_circle = last * j / n_rays;
      const double on_ray = last * k / n;
      const double ang = crossing_angle_deg(fig.circle_images[k - 1], on_circle, true, fig.ray_images[j], on_ray, false);
      out.worst_angle_error = std::max(out.worst_angle_error, std::abs(90.0 - ang));
    }
  }
  return out;
}

}  // namespace lcp::verify
