#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lcp/triangle.hpp"
#include "lcp/types.hpp"

// Batch kernels with a serial reference and an OpenMP version. Both return
// bit-identical results: every output slot is computed by the same scalar
// code, only the iteration order differs.
namespace lcp::kernels {

using PointFn = std::function<double(Complex)>;
using DiskMap = std::function<Complex(Complex)>;

/// n x n interior points: the square (s, t) in (0,1)^2 at cell centres,
/// folded onto the triangle by v0 + s (v1 - v0) + s t (v2 - v1).
std::vector<Complex> square_grid(const Triangle& tri, int n);

std::vector<double> evaluate_serial(const PointFn& f, std::span<const Complex> points);
std::vector<double> evaluate_parallel(const PointFn& f, std::span<const Complex> points);

struct CurveSet {
  std::vector<std::vector<Complex>> circles;  // images of |zeta| = k / n_circles, closed
  std::vector<std::vector<Complex>> rays;     // images of arg zeta = 2 pi j / n_rays, from 0 to 1
};

/// Samples g on circles |zeta| = k / n_circles (k = 1..n_circles, `samples`
/// points each, last point repeating the first) and rays
/// zeta = t exp(2 pi i j / n_rays) with t = i / (samples - 1).
CurveSet trace_serial(const DiskMap& g, int n_circles, int n_rays, int samples);
CurveSet trace_parallel(const DiskMap& g, int n_circles, int n_rays, int samples);

/// Number of threads evaluate_parallel / trace_parallel use (1 without OpenMP).
int max_threads();

}  // namespace lcp::kernels
