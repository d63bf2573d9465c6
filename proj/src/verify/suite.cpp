#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <random>

#include "lcp/capacity.hpp"
#include "lcp/constants.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/hypergeometric.hpp"
#include "lcp/jacobi.hpp"
#include "lcp/kernels.hpp"
#include "lcp/optimizer.hpp"
#include "lcp/sc_map.hpp"
#include "lcp/verify.hpp"
#include "lcp/weierstrass.hpp"

namespace lcp::verify {

namespace {

// Published reference values.
constexpr double kT0 = 0.3011216108413220816;
constexpr double kMaxRadiusIso = 0.3346161009568417919;
constexpr double kG2 = 11.8170450080;
constexpr double kP1 = 1.7187964545;
constexpr double kKappa = 1.3110287771;
constexpr double kK_half = 1.8540746773;
constexpr double kKappa30Twice = 5.2999162508;
constexpr Complex kPhiInvI{0.1926647354, 0.2970894700};
constexpr Complex kPsiInvI{0.2970894700, 0.1926647354};
constexpr double kKoberW = 0.4154481080;
constexpr double kKoberAxis = 0.3977567783173558369;
constexpr Complex kTheta30AtI{0.7065812599, 1.6814450943};
constexpr Complex kW0_30{0.3599371272, 0.4062604057};
constexpr double kRadius30Coeff = 0.2105704622;
constexpr double kCentroidRadius6913 = 1.802305;
constexpr double kMaxRadius6913 = 1.979479;
constexpr Complex kW0_6913{0.929617, 1.842564};

Triangle triangle_6913() { return Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0)); }

class RowBuilder {
 public:
  RowBuilder(Row& row, std::optional<double> tol) : row_(row), override_(tol) {}

  void check(std::string name, double error, double tol) { record(std::move(name), error, tol, true); }
  /// Counts and angles: --tol does not apply.
  void structural(std::string name, double error, double tol) { record(std::move(name), error, tol, false); }
  void record(std::string name, double error, double tol, bool scalable) {
    if (override_ && scalable) tol = *override_;
    const bool ok = std::isfinite(error) && error <= tol;
    row_.checks.push_back({std::move(name), error, tol, ok});
  }
  void near(std::string name, double got, double want, double tol) { check(std::move(name), std::abs(got - want), tol); }
  void near(std::string name, Complex got, Complex want, double tol) {
    check(std::move(name), std::abs(got - want), tol);
  }
  /// Per-coordinate comparison.
  void near_xy(const std::string& name, Complex got, Complex want, double tol) {
    check(name + ".x", std::abs(got.real() - want.real()), tol);
    check(name + ".y", std::abs(got.imag() - want.imag()), tol);
  }

 private:
  Row& row_;
  std::optional<double> override_;
};

// Interior grid of the unit triangle (0, 1, i) at cell centres of an n x n
// square grid folded onto it.
std::vector<Complex> unit_grid(int n) { return kernels::square_grid(exact::iso_right_unit().triangle, n); }

void row_t0(RowBuilder& r) {
  r.near("closed form", exact::t0_closed_form(), kT0, 1e-12);

  const auto& unit = exact::iso_right_unit().triangle;
  const opt::Optimum o = opt::maximize_inner_radius([](Complex w) { return 1.0 / exact::h_sigma(w); }, unit);
  r.near_xy("2-D minimization", o.point, Complex(kT0, kT0), 1e-9);

  const double y = exact::solve_axis_critical();
  r.near("axis root", (1.0 - y / constants::kappa_iso()) / 2.0, kT0, 1e-12);
}

void row_max_radius_iso(RowBuilder& r) {
  const double radius = 1.0 / exact::h_sigma(Complex(kT0, kT0));
  r.near("1/h(w0)", radius, kMaxRadiusIso, 1e-11);
  r.near("1/h(w0) vs closed form", radius, constants::max_inner_radius_iso(), 1e-12);
}

void row_constants(RowBuilder& r) {
  const double p1 = weierstrass_p(1.0).real();
  // p'(1) = 0 at a half-period, so the differential equation gives g2 = 4 p(1)^2.
  r.near("g2 = 4 p(1)^2", 4.0 * p1 * p1, kG2, 1e-9);
  r.near("p(1)", p1, kP1, 1e-9);
  const double k_half = elliptic_K(0.5);
  r.near("kappa = K(1/2)/sqrt 2", k_half / std::sqrt(2.0), kKappa, 1e-9);
  r.near("K(1/2)", k_half, kK_half, 1e-9);
  // k30 = B(1/2; 1/3, 1/3), by quadrature rather than the Gamma formula.
  r.near("kappa30 by quadrature", incomplete_beta(0.5, 1.0 / 3.0, 1.0 / 3.0).real(), kKappa30Twice / 2.0, 1e-9);
}

void row_wp_preimages(RowBuilder& r) {
  r.near("phi_inv(i)", exact::map_phi_inv(kI), kPhiInvI, 1e-8);
  r.near("psi_inv(i)", exact::map_psi_inv(kI), kPsiInvI, 1e-8);
  double worst = 0.0;
  for (Complex z : unit_grid(10)) {
    const Complex v = std::conj(exact::map_psi(kI * std::conj(z))) * exact::map_phi(z);
    worst = std::max(worst, std::abs(v - 1.0));
  }
  r.check("conj(psi(i conj z)) phi(z) = 1 on 10x10", worst, 1e-9);
}

void row_kober(RowBuilder& r) {
  r.near("theta(i w)", exact::theta_iso(Complex(0.0, kKoberW)), kI, 1e-8);
  const double k = constants::kappa_iso();
  const opt::SegmentOptimum s =
      opt::maximize_on_segment([](double y) { return 1.0 / exact::h_theta_axis(y); }, 0.2 * k, 0.6 * k, 1e-10 * k);
  r.near("axis optimum / kappa", s.argmax / k, kKoberAxis, 1e-11);
  r.near("(kappa - |w~0|)/(sqrt2 kappa) = sqrt2 t0", (k - s.argmax) / (std::sqrt(2.0) * k),
         std::sqrt(2.0) * exact::t0_closed_form(), 1e-11);
}

void row_306090(RowBuilder& r) {
  const auto& chart = exact::triangle_306090();
  const double k = chart.kappa;
  r.near("theta30(w)", exact::theta_306090(kTheta30AtI), kI, 1e-7);
  const opt::Optimum o = opt::maximize_inner_radius([](Complex w) { return 1.0 / exact::h_306090(w); }, chart.triangle);
  r.near_xy("least capacity point / kappa30", o.point / k, kW0_30, 1e-8);
  r.near("max radius", o.value, kRadius30Coeff * 2.0 * k, 1e-9);
  r.near("max radius vs closed form", o.value, constants::max_inner_radius_306090_coefficient() * 2.0 * k, 1e-10);
}

void row_6913(RowBuilder& r) {
  const Triangle tri = triangle_6913();
  const cap::RadiusEngine engine(tri, cap::Backend::SchwarzChristoffel);
  r.near("radius at centroid", engine(tri.centroid()), kCentroidRadius6913, 1e-4);
  const cap::CapacityReport rep = cap::least_capacity_point(tri, cap::Backend::SchwarzChristoffel);
  r.near("max radius", rep.inner_radius, kMaxRadius6913, 1e-4);
  r.near_xy("least capacity point", rep.point, kW0_6913, 1e-4);
}

void row_cross_engine(RowBuilder& r) {
  const exact::TriangleChart& unit = exact::iso_right_unit();
  const Similarity to_kober = exact::unit_to_kober();
  double worst = 0.0;
  for (Complex w : unit_grid(10)) {
    const double rs = 1.0 / exact::h_sigma(w);
    const double rj = 1.0 / exact::h_theta(to_kober.apply(w)) / to_kober.ratio();
    worst = std::max(worst, std::abs(rs - rj));
  }
  r.check("sigma vs jacobi, 10x10", worst, 1e-10);

  const sc::SCMap sc_iso = sc::SCMap::build(unit.triangle);
  worst = 0.0;
  for (Complex w : kernels::square_grid(unit.triangle, 7))
    worst = std::max(worst, std::abs(sc_iso.inner_radius(w).radius - 1.0 / exact::h_sigma(w)));
  r.check("SC vs sigma, 7x7", worst, 1e-8);

  const exact::TriangleChart& t30 = exact::triangle_306090();
  const sc::SCMap sc_30 = sc::SCMap::build(t30.triangle);
  worst = 0.0;
  for (Complex w : kernels::square_grid(t30.triangle, 7))
    worst = std::max(worst, std::abs(sc_30.inner_radius(w).radius - 1.0 / exact::h_306090(w)));
  r.check("SC vs 30-60-90, 7x7", worst, 1e-8);

  const Triangle base = triangle_6913();
  const Complex w = base.centroid();
  const double r0 = sc::SCMap::build(base).inner_radius(w).radius;
  std::mt19937_64 rng(20260318);
  std::uniform_real_distribution<double> mag(0.2, 5.0), ang(-3.14159, 3.14159), off(-10.0, 10.0);
  worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Complex a = std::polar(mag(rng), ang(rng));
    const Complex b(off(rng), off(rng));
    const double ri = sc::SCMap::build(base.transformed(a, b)).inner_radius(a * w + b).radius;
    worst = std::max(worst, std::abs(ri - std::abs(a) * r0) / std::abs(a));
  }
  r.check("SC similarity covariance, 10 random (a, b)", worst, 1e-9);
}

void row_special(RowBuilder& r) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto random_disk = [&](double radius) {
    for (;;) {
      const Complex z(u(rng), u(rng));
      if (std::abs(z) < 1.0) return radius * z;
    }
  };
  const LatticeParams& lat = LatticeParams::lemniscatic();

  double odd = 0.0, quasi = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_disk(2.0);
    odd = std::max(odd, std::abs(weierstrass_sigma(-z) + weierstrass_sigma(z)));
    const Complex lhs = weierstrass_sigma(z + 2.0);
    const Complex rhs = -std::exp(2.0 * lat.eta1 * (z + 1.0)) * weierstrass_sigma(z);
    quasi = std::max(quasi, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  r.check("sigma odd, 100 points", odd, 1e-12);
  r.check("sigma quasi-periodic (relative)", quasi, 1e-10);

  double period = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex z = Complex(0.1, 0.1) + 0.8 * Complex((u(rng) + 1.0) / 2.0, (u(rng) + 1.0) / 2.0);
    const Complex p = weierstrass_p(z);
    period = std::max({period, std::abs(weierstrass_p(z + 2.0) - p) / std::abs(p),
                       std::abs(weierstrass_p(z + Complex(0.0, 2.0)) - p) / std::abs(p)});
  }
  r.check("p periodic (relative)", period, 1e-10);

  double ode = 0.0;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j) {
      const Complex z(0.1 + 0.8 * i / 19.0, 0.1 + 0.8 * j / 19.0);
      const Complex p = weierstrass_p(z), dp = weierstrass_p_prime(z);
      ode = std::max(ode, std::abs(dp * dp - 4.0 * p * p * p + lat.g2 * p));
    }
  r.check("p differential equation, 20x20", ode, 1e-9);

  double ident = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex v = Complex(2.0 * u(rng), 0.9 * u(rng));
    const JacobiComplex j = jacobi_sn_cn_dn(v, 0.5);
    ident = std::max({ident, std::abs(j.sn * j.sn + j.cn * j.cn - 1.0), std::abs(j.dn * j.dn + 0.5 * j.sn * j.sn - 1.0)});
  }
  r.check("sn^2 + cn^2 = 1, dn^2 + m sn^2 = 1", ident, 1e-11);

  double agm = 0.0;
  for (int i = 1; i <= 9; ++i) agm = std::max(agm, std::abs(elliptic_K(i / 10.0) - elliptic_K_trapezoid(i / 10.0)));
  r.check("K by AGM vs trapezoid", agm, 1e-12);

  const double x = std::sqrt((1.0 + std::sqrt(3.0)) / 2.0);
  const std::array<Complex, 2> straight{0.0, Complex(x, 0.0)};
  const std::array<Complex, 3> bent{0.0, Complex(0.6, 0.4), Complex(x, 0.0)};
  r.check("F path independence, m = 2",
          std::abs(elliptic_F_along(straight, 2.0) - elliptic_F_along(bent, 2.0)), 1e-10);

  double dbeta = 0.0;
  for (Complex z : {Complex(0.3, 0.2), Complex(-0.4, 0.7), Complex(1.5, 0.5)}) {
    for (auto [a, b] : {std::pair{0.5, 0.25}, std::pair{0.25, 0.25}, std::pair{1.0 / 3.0, 1.0 / 3.0}}) {
      const Complex fd = (incomplete_beta(z + 1e-6, a, b) - incomplete_beta(z - 1e-6, a, b)) / 2e-6;
      const Complex exact = std::pow(z, a - 1.0) * std::pow(1.0 - z, b - 1.0);
      dbeta = std::max(dbeta, std::abs(fd - exact) / std::abs(exact));
    }
  }
  r.check("d/dz incomplete beta (relative)", dbeta, 1e-6);

  double product = 0.0;
  const std::array<Complex, 10> pts{Complex(1.0, 0.0), Complex(0.3, 0.2), Complex(-0.5, 0.8), Complex(1.2, -0.7),
                                    Complex(0.0, 1.5), Complex(-1.1, -0.4), Complex(0.7, 1.1), Complex(1.6, 0.3),
                                    Complex(-0.2, -1.3), Complex(0.9, 0.9)};
  for (Complex z : pts) product = std::max(product, std::abs(weierstrass_sigma(z) - sigma_lattice_product(z)));
  r.check("sigma theta series vs lattice product", product, 1e-8);
}

void row_figures(RowBuilder& r) {
  const exact::TriangleChart& unit = exact::iso_right_unit();
  const exact::TriangleChart& t30 = exact::triangle_306090();
  const double t0 = exact::t0_closed_form();
  struct Case {
    const char* name;
    Triangle tri;
    Complex center;
  };
  const Triangle tri6913 = triangle_6913();
  const opt::Optimum o30 = opt::maximize_inner_radius([](Complex w) { return 1.0 / exact::h_306090(w); }, t30.triangle);
  const cap::CapacityReport c6913 = cap::least_capacity_point(tri6913, cap::Backend::SchwarzChristoffel);
  const std::array<Case, 3> cases{Case{"iso-right", unit.triangle, Complex(t0, t0)},
                                  Case{"30-60-90", t30.triangle, o30.point},
                                  Case{"6-9-13", tri6913, c6913.point}};
  for (const Case& c : cases) {
    const cap::FigureGeometry fig = cap::figure_geometry(c.tri, c.center);
    const FigureAudit a = audit_figure(c.tri, fig);
    const std::string n = c.name;
    r.check(n + " outer circle on boundary (/diameter)", a.outer_gap, 1e-6);
    r.check(n + " points inside (/diameter)", a.outside, 1e-8);
    r.structural(n + " nesting violations", a.nesting_violations, 0.0);
    r.structural(n + " orthogonality (degrees)", a.worst_angle_error, 0.5);
  }
}

struct RowSpec {
  int id;
  std::vector<std::string> tags;
  const char* title;
  void (*run)(RowBuilder&);
};

const std::vector<RowSpec>& rows() {
  static const std::vector<RowSpec> specs{
      {1, {"sigma", "jacobi", "t0"}, "t0 three ways: closed form, 2-D minimization, axis root", row_t0},
      {2, {"sigma"}, "maximum inner radius of the unit isosceles right triangle", row_max_radius_iso},
      {3, {"constants", "sigma", "jacobi", "30-60-90"}, "g2, p(1), kappa, K(1/2), kappa30", row_constants},
      {4, {"wp"}, "p-function preimages and the phi/psi identity", row_wp_preimages},
      {5, {"jacobi", "kober"}, "Kober map checkpoints and the axis optimum", row_kober},
      {6, {"30-60-90"}, "30-60-90 map, least capacity point and maximum radius", row_306090},
      {7, {"sc", "6-9-13"}, "6-9-13 triangle via Schwarz-Christoffel", row_6913},
      {8, {"cross"}, "cross-engine agreement and similarity covariance", row_cross_engine},
      {9, {"special"}, "special-function properties and the lattice-product oracle", row_special},
      {10, {"figure"}, "figure geometry for the three presets", row_figures},
  };
  return specs;
}

bool selected(const RowSpec& spec, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const std::string& o : only) {
    if (o == std::to_string(spec.id) || o == "C" + std::to_string(spec.id)) return true;
    if (std::find(spec.tags.begin(), spec.tags.end(), o) != spec.tags.end()) return true;
  }
  return false;
}

Row run_row(const RowSpec& spec, std::optional<double> tol) {
  Row row;
  row.id = spec.id;
  row.tags = spec.tags;
  row.title = spec.title;
  const auto start = std::chrono::steady_clock::now();
  RowBuilder b(row, tol);
  try {
    spec.run(b);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

bool Row::pass() const {
  if (!error.empty() || checks.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::vector<std::string> known_tags() {
  std::vector<std::string> tags;
  for (const RowSpec& s : rows())
    for (const std::string& t : s.tags)
      if (std::find(tags.begin(), tags.end(), t) == tags.end()) tags.push_back(t);
  return tags;
}

std::vector<Row> run_suite(const SuiteOptions& opts) {
  for (const std::string& o : opts.only) {
    const auto tags = known_tags();
    const bool is_tag = std::find(tags.begin(), tags.end(), o) != tags.end();
    const bool is_id = std::any_of(rows().begin(), rows().end(), [&](const RowSpec& s) {
      return o == std::to_string(s.id) || o == "C" + std::to_string(s.id);
    });
    if (!is_tag && !is_id) throw DomainError("verify: unknown row or tag '" + o + "'");
  }
  if (opts.tol && !(*opts.tol > 0.0)) throw DomainError("verify: tolerance must be positive");

  std::vector<Row> out;
  std::vector<std::future<Row>> pending;
  for (const RowSpec& spec : rows()) {
    if (!selected(spec, opts.only)) continue;
    if (opts.concurrent) {
      pending.push_back(std::async(std::launch::async, run_row, std::cref(spec), opts.tol));
    } else {
      out.push_back(run_row(spec, opts.tol));
    }
  }
  for (auto& f : pending) out.push_back(f.get());
  return out;  // rows() is sorted by id, so is this
}

void print_rows(std::ostream& os, const std::vector<Row>& rows, bool details) {
  char buf[256];
  for (const Row& row : rows) {
    double worst_ratio = 0.0;
    const Check* worst = nullptr;
    for (const Check& c : row.checks) {
      const double ratio = c.tol > 0 ? c.error / c.tol : (c.error > 0 ? INFINITY : 0.0);
      if (!worst || !(ratio <= worst_ratio)) {
        worst_ratio = ratio;
        worst = &c;
      }
    }
    std::snprintf(buf, sizeof buf, "C%-2d %s  %s", row.id, row.pass() ? "PASS" : "FAIL", row.title.c_str());
    os << buf;
    if (!row.error.empty()) {
      os << "  [error: " << row.error << "]";
    } else if (worst) {
      std::snprintf(buf, sizeof buf, "  [worst %.2e / tol %.0e: %s]", worst->error, worst->tol, worst->name.c_str());
      os << buf;
    }
    os << '\n';
    if (details) {
      for (const Check& c : row.checks) {
        std::snprintf(buf, sizeof buf, "      %s  %-48s %.3e  (tol %.0e)\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                      c.error, c.tol);
        os << buf;
      }
    }
  }
}

}  // namespace lcp::verify
