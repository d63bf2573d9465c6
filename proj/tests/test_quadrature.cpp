#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lcp/errors.hpp"
#include "lcp/quadrature.hpp"

using namespace lcp;
using namespace lcp::quad;

namespace {

// int_{-1}^{1} (1-x)^a (1+x)^(b+k) dx
double jacobi_moment(double a, double b, int k) {
  const double bb = b + k;
  return std::exp((a + bb + 1) * std::log(2.0) + std::lgamma(a + 1) + std::lgamma(bb + 1) - std::lgamma(a + bb + 2));
}

}  // namespace

TEST_CASE("Gauss-Jacobi rules integrate polynomials of degree 2n-1 exactly") {
  for (auto [a, b] : {std::pair{-0.5, -0.25}, std::pair{0.3, -0.7}, std::pair{0.0, 0.0}, std::pair{-5.0 / 6, 0.0}}) {
    const GaussJacobiRule r = make_gauss_jacobi(8, a, b);
    REQUIRE(r.size() == 8);
    for (int k = 0; k < 16; ++k) {
      double s = 0.0;
      for (int i = 0; i < r.size(); ++i) s += r.weights[i] * std::pow(1.0 + r.nodes[i], k);
      CHECK(s == doctest::Approx(jacobi_moment(a, b, k)).epsilon(1e-13));
    }
  }
}

TEST_CASE("Gauss-Jacobi nodes are sorted inside (-1, 1) with positive weights") {
  const GaussJacobiRule r = make_gauss_jacobi(64, -0.75, -0.5);
  for (int i = 0; i < r.size(); ++i) {
    CHECK(r.nodes[i] > -1.0);
    CHECK(r.nodes[i] < 1.0);
    CHECK(r.weights[i] > 0.0);
    if (i) CHECK(r.nodes[i] > r.nodes[i - 1]);
  }
}

TEST_CASE("Chebyshev weight matches the closed-form rule") {
  const int n = 40;
  const GaussJacobiRule r = make_gauss_jacobi(n, -0.5, -0.5);
  for (int k = 1; k <= n; ++k) {
    // ascending order: x_k = -cos((2k - 1) pi / 2n)
    const double x = -std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
    CHECK(r.nodes[k - 1] == doctest::Approx(x).epsilon(1e-14));
    CHECK(r.weights[k - 1] == doctest::Approx(std::numbers::pi / n).epsilon(1e-13));
  }
}

TEST_CASE("rule cache returns the same immutable table") {
  const auto a = gauss_jacobi(48, -0.5, 0.25);
  const auto b = gauss_jacobi(48, -0.5, 0.25);
  CHECK(a.get() == b.get());
  CHECK(gauss_jacobi(48, 0.25, -0.5).get() != a.get());
}

TEST_CASE("compound integration handles endpoint singularities") {
  const std::array<Singularity, 1> at0{Singularity{0.0, -0.5}};
  const Complex v = integrate_compound([](Complex s) { return 1.0 / std::sqrt(s); }, 0.0, 1.0, at0);
  CHECK(std::abs(v - 2.0) < 1e-14);

  // int_0^1 s^{-1/2} (1-s)^{-1/2} ds = pi, with a break in the middle
  const std::array<Singularity, 2> both{Singularity{0.0, -0.5}, Singularity{1.0, -0.5}};
  const Complex pi = integrate_compound([](Complex s) { return 1.0 / std::sqrt(s * (1.0 - s)); }, 0.0, 1.0, both);
  CHECK(std::abs(pi - std::numbers::pi) < 1e-13);
}

TEST_CASE("compound integration refines near off-path singularities") {
  // 1/sqrt(s - p) with p just above the path: antiderivative 2 sqrt(s - p)
  const Complex p(0.5, 1e-3);
  const std::array<Singularity, 1> near{Singularity{p, -0.5}};
  const Complex v = integrate_compound([&](Complex s) { return 1.0 / std::sqrt(s - p); }, 0.0, 1.0, near);
  const Complex exact = 2.0 * (std::sqrt(1.0 - p) - std::sqrt(-p));
  CHECK(std::abs(v - exact) < 1e-12);
}

TEST_CASE("real-axis segments sample the side selected by the sign of zero") {
  // sqrt(s - 2) on [0, 1] has its cut along the path: upper side gives +i sqrt(2 - s)
  const std::array<Singularity, 1> none{Singularity{2.0, 0.5}};
  auto f = [](Complex s) { return std::sqrt(s - 2.0); };
  const Complex up = integrate_compound(f, 0.0, Complex(1.0, 0.0), none);
  const Complex down = integrate_compound(f, 0.0, Complex(1.0, -0.0), none);
  const double mag = 2.0 / 3.0 * (std::pow(2.0, 1.5) - 1.0);
  CHECK(std::abs(up - Complex(0.0, mag)) < 1e-13);
  CHECK(std::abs(down - Complex(0.0, -mag)) < 1e-13);
}

TEST_CASE("non-integrable interior break is rejected") {
  const std::array<Singularity, 1> pole{Singularity{0.5, -1.0}};
  CHECK_THROWS_AS(integrate_compound([](Complex s) { return 1.0 / (s - 0.5); }, 0.0, 1.0, pole), DomainError);
}

TEST_CASE("adaptive driver converges on smooth integrands") {
  const AdaptiveResult r = integrate_adaptive([](Complex s) { return std::exp(s); }, 0.0, Complex(1.0, 1.0), {});
  CHECK(std::abs(r.value - (std::exp(Complex(1.0, 1.0)) - 1.0)) < 1e-14);
  CHECK(r.change < 1e-13);
  const std::array<Complex, 3> path{0.0, Complex(0.0, 1.0), Complex(1.0, 1.0)};
  CHECK(std::abs(integrate_path([](Complex s) { return std::exp(s); }, path, {}) - r.value) < 1e-14);
}

TEST_CASE("anchored integrands keep full precision next to a branch point") {
  // int_p^{p + d} (s - p)^{-0.9} ds = 10 d^{0.1}, with p not representable in binary
  const double p = 0.7, q = p + 1e-9;
  const std::array<Singularity, 1> at{Singularity{p, -0.9}};
  const double exact = 10.0 * std::pow(q - p, 0.1);  // q - p is exact
  const AnchoredIntegrand f = [p](Complex s, Complex anchor, Complex offset) {
    return std::pow(anchor == Complex(p, 0.0) ? offset : s - p, -0.9);
  };
  CHECK(std::abs(integrate_compound(f, p, q, at) - exact) < 1e-14 * exact);
  // the same integrand written in s alone loses digits to cancellation
  const Complex naive = integrate_compound([p](Complex s) { return std::pow(s - p, -0.9); }, p, q, at);
  CHECK(std::abs(naive - exact) > 1e-12 * exact);
}
