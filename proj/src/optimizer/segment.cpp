#include <cmath>

#include "lcp/errors.hpp"
#include "lcp/optimizer.hpp"

namespace lcp::opt {

SegmentOptimum maximize_on_segment(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b) || !(tol > 0.0)) throw DomainError("maximize_on_segment: need a < b and tol > 0");
  int evals = 0;
  auto F = [&](double x) {
    ++evals;
    return f(x);
  };

  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = a, hi = b;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = F(x1), f2 = F(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = F(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = F(x1);
    }
  }
  double x = f1 > f2 ? x1 : x2;
  double fx = std::max(f1, f2);

  // Golden section stalls near sqrt(eps) relative; Newton on f' finishes.
  const double width = b - a;
  for (int it = 0; it < 3; ++it) {
    const double h = std::min(1e-3 * width, std::min(x - a, b - x) / 2.0);
    if (!(h > 0.0)) break;
    const double fp1 = F(x + h), fm1 = F(x - h), fp2 = F(x + 2 * h), fm2 = F(x - 2 * h);
    const double d1 = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
    const double d2 = (-fp2 + 16.0 * fp1 - 30.0 * fx + 16.0 * fm1 - fm2) / (12.0 * h * h);
    if (!(d2 < 0.0)) break;
    const double next = x - d1 / d2;
    if (!(next > a && next < b) || std::abs(next - x) > 10.0 * std::max(tol, h)) break;
    const double fn = F(next);
    if (fn < fx - 1e-13 * std::max(1.0, std::abs(fx))) break;
    const double step = std::abs(next - x);
    x = next;
    fx = fn;
    if (step < 1e-15 * width) break;
  }
  return {x, fx, evals};
}

}  // namespace lcp::opt
