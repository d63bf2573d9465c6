#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "lcp/cli.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"
#include "lcp/verify.hpp"

namespace lcp::cli {

namespace {

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw DomainError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

struct TriangleArgs {
  std::string preset;
  std::vector<std::string> vertices;

  void add_to(CLI::App* app) {
    app->add_option("vertices", vertices, "three vertices as x,y (instead of --preset)")->expected(0, 3);
    app->add_option("--preset", preset, "iso-right | 30-60-90 | 6-9-13");
  }

  Triangle resolve() const {
    if (!preset.empty() && !vertices.empty()) throw DomainError("give either --preset or three vertices, not both");
    if (!preset.empty()) return cli::preset(preset);
    if (vertices.size() != 3) throw DomainError("a triangle needs --preset or exactly three vertices x,y");
    return Triangle::make(parse_point(vertices[0]), parse_point(vertices[1]), parse_point(vertices[2]));
  }
};

// Writes to --out when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DomainError("cannot open '" + path + "' for writing");
      os_ = file_.get();
    }
  }
  std::ostream& stream() { return *os_; }
  void close() {
    if (file_) {
      file_->close();
      if (!*file_) throw DomainError("write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

constexpr const char* kPresetHelp =
    "Presets: iso-right = (0, 1, i); 30-60-90 = (0, k30, i sqrt(3) k30) with "
    "k30 = Gamma(1/3) Gamma(1/6) / (2^(5/3) sqrt(pi)) = 2.6499...; "
    "6-9-13 = (0, 6, -13/3 + i 4 sqrt(35)/3). Centers quoted for the 30-60-90 "
    "triangle as 0.359 + 0.406i are in units of k30.";

}  // namespace

Triangle preset(std::string_view name) {
  if (name == "iso-right") return Triangle::make(0.0, 1.0, kI);
  if (name == "30-60-90") return exact::triangle_306090().triangle;
  if (name == "6-9-13") return Triangle::make(0.0, 6.0, Complex(-13.0 / 3.0, 4.0 * std::sqrt(35.0) / 3.0));
  throw DomainError("unknown preset '" + std::string(name) + "' (iso-right, 30-60-90, 6-9-13)");
}

Complex parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw DomainError("expected a point as x,y but got '" + std::string(text) + "'");
  }
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

cap::Backend parse_backend(std::string_view name) {
  if (name == "auto") return cap::Backend::Auto;
  if (name == "sigma") return cap::Backend::SigmaExact;
  if (name == "jacobi") return cap::Backend::JacobiExact;
  if (name == "sc") return cap::Backend::SchwarzChristoffel;
  throw DomainError("unknown backend '" + std::string(name) + "' (auto, sigma, jacobi, sc)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inner radius and least capacity point of a triangle.", "lcp"};
  app.footer(kPresetHelp);
  app.require_subcommand(1);

  TriangleArgs center_tri, radius_tri, figure_tri;
  std::string backend = "auto", at, fig_center, out_path, format;
  double tol = 0.0;
  int circles = 10, rays = 24, samples = 512;
  std::vector<std::string> only;
  bool details = false, serial = false;

  CLI::App* center = app.add_subcommand("center", "least capacity point (JSON report)");
  center_tri.add_to(center);
  center->add_option("--backend", backend, "auto | sigma | jacobi | sc");
  center->add_option("--tol", tol, "optimizer position tolerance relative to the diameter");
  center->add_option("--out", out_path, "write the report here instead of stdout");
  center->add_option("--format", format, "json (the only report format)");

  CLI::App* radius = app.add_subcommand("radius", "inner radius at a point (JSON report)");
  radius_tri.add_to(radius);
  radius->add_option("--at", at, "query point x,y")->required();
  radius->add_option("--backend", backend, "auto | sigma | jacobi | sc");
  radius->add_option("--out", out_path, "write the report here instead of stdout");
  radius->add_option("--format", format, "json (the only report format)");

  CLI::App* figure = app.add_subcommand("figure", "images of concentric circles and radii (CSV or SVG)");
  figure_tri.add_to(figure);
  figure->add_option("--center", fig_center, "conformal center x,y (default: least capacity point)");
  figure->add_option("--format", format, "csv | svg")->check(CLI::IsMember({"csv", "svg"}));
  figure->add_option("--out", out_path, "output file (default stdout)");
  figure->add_option("--circles", circles, "number of circles")->check(CLI::PositiveNumber);
  figure->add_option("--rays", rays, "number of radial segments")->check(CLI::NonNegativeNumber);
  figure->add_option("--samples", samples, "points per curve")->check(CLI::Range(3, 1 << 20));
  figure->add_flag("--serial", serial, "use the serial reference kernel");

  CLI::App* verify = app.add_subcommand("verify", "run the reference-value suite");
  verify->add_option("--only", only, "row ids (C1..C10) or tags: " + [] {
    std::string s;
    for (const auto& t : verify::known_tags()) s += (s.empty() ? "" : ", ") + t;
    return s;
  }());
  verify->add_option("--tol", tol, "replace every value tolerance (counts and angles keep theirs)");
  verify->add_flag("--details", details, "print every individual check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) {
      verify::SuiteOptions opts;
      opts.only = only;
      if (verify->count("--tol")) opts.tol = tol;
      const auto rows = verify::run_suite(opts);
      verify::print_rows(out, rows, details);
      const bool ok = std::all_of(rows.begin(), rows.end(), [](const verify::Row& r) { return r.pass(); });
      return ok ? kOk : kVerifyFailed;
    }

    if (!format.empty() && format != "json" && !*figure) throw DomainError("reports are JSON only");

    if (*center) {
      const Triangle tri = center_tri.resolve();
      opt::OptimizerConfig cfg;
      if (center->count("--tol")) {
        if (!(tol > 0.0)) throw DomainError("--tol must be positive");
        cfg.tol_x = tol;
      }
      const cap::CapacityReport rep = cap::least_capacity_point(tri, parse_backend(backend), cfg);
      Sink sink(out_path, out);
      sink.stream() << report_json(rep).dump(2) << '\n';
      sink.close();
      return rep.converged ? kOk : kNotConverged;
    }

    if (*radius) {
      const Triangle tri = radius_tri.resolve();
      const cap::CapacityReport rep = cap::radius_at(tri, parse_point(at), parse_backend(backend));
      Sink sink(out_path, out);
      sink.stream() << report_json(rep).dump(2) << '\n';
      sink.close();
      return kOk;
    }

    const Triangle tri = figure_tri.resolve();
    const Complex c = fig_center.empty() ? cap::least_capacity_point(tri).point : parse_point(fig_center);
    const cap::FigureGeometry fig = cap::figure_geometry(tri, c, circles, rays, samples, !serial);
    Sink sink(out_path, out);
    if (format == "svg") {
      write_svg(sink.stream(), tri, fig);
    } else {
      write_csv(sink.stream(), fig);
    }
    sink.close();
    return kOk;
  } catch (const ConvergenceError& e) {
    err << "lcp: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "lcp: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lcp::cli
