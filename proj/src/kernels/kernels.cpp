#include "lcp/kernels.hpp"

#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>

#include "lcp/errors.hpp"

#ifdef LCP_HAVE_OPENMP
#include <omp.h>
#endif

namespace lcp::kernels {

namespace {

// Keeps the first exception thrown inside a parallel region so it can be
// rethrown on the calling thread.
class FirstError {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr err_;
};

void check_shape(int n_circles, int n_rays, int samples) {
  if (n_circles < 1 || n_rays < 0 || samples < 3) {
    throw DomainError("trace: need n_circles >= 1, n_rays >= 0, samples >= 3");
  }
}

// Disk point for sample i of curve c, where curves 0..n_circles-1 are the
// circles and the rest are rays.
Complex sample_point(int c, int i, int n_circles, int n_rays, int samples) {
  const double two_pi = 2.0 * std::numbers::pi;
  if (c < n_circles) {
    const double r = static_cast<double>(c + 1) / n_circles;
    const int j = i % (samples - 1);  // closes the curve exactly
    return std::polar(r, two_pi * j / (samples - 1));
  }
  const int ray = c - n_circles;
  const double t = static_cast<double>(i) / (samples - 1);
  return std::polar(t, two_pi * ray / n_rays);
}

CurveSet allocate(int n_circles, int n_rays, int samples) {
  CurveSet out;
  out.circles.assign(n_circles, std::vector<Complex>(samples));
  out.rays.assign(n_rays, std::vector<Complex>(samples));
  return out;
}

Complex& slot(CurveSet& set, int c, int i) {
  const int n_circles = static_cast<int>(set.circles.size());
  return c < n_circles ? set.circles[c][i] : set.rays[c - n_circles][i];
}

}  // namespace

std::vector<Complex> square_grid(const Triangle& tri, int n) {
  if (n < 1) throw DomainError("square_grid: n must be positive");
  const Complex v0 = tri.vertex(0), v1 = tri.vertex(1), v2 = tri.vertex(2);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double s = (i + 0.5) / n;
    for (int j = 0; j < n; ++j) {
      const double t = (j + 0.5) / n;
      pts.push_back(v0 + s * (v1 - v0) + s * t * (v2 - v1));
    }
  }
  return pts;
}

std::vector<double> evaluate_serial(const PointFn& f, std::span<const Complex> points) {
  std::vector<double> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = f(points[i]);
  return out;
}

std::vector<double> evaluate_parallel(const PointFn& f, std::span<const Complex> points) {
  std::vector<double> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    err.run([&] { out[i] = f(points[i]); });
  }
  err.rethrow();
  return out;
}

CurveSet trace_serial(const DiskMap& g, int n_circles, int n_rays, int samples) {
  check_shape(n_circles, n_rays, samples);
  CurveSet out = allocate(n_circles, n_rays, samples);
  for (int c = 0; c < n_circles + n_rays; ++c)
    for (int i = 0; i < samples; ++i) slot(out, c, i) = g(sample_point(c, i, n_circles, n_rays, samples));
  return out;
}

CurveSet trace_parallel(const DiskMap& g, int n_circles, int n_rays, int samples) {
  check_shape(n_circles, n_rays, samples);
  CurveSet out = allocate(n_circles, n_rays, samples);
  const long total = static_cast<long>(n_circles + n_rays) * samples;
  FirstError err;
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < total; ++k) {
    const int c = static_cast<int>(k / samples);
    const int i = static_cast<int>(k % samples);
    err.run([&] { slot(out, c, i) = g(sample_point(c, i, n_circles, n_rays, samples)); });
  }
  err.rethrow();
  return out;
}

int max_threads() {
#ifdef LCP_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lcp::kernels
