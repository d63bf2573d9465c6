#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcp/cli.hpp"
#include "lcp/errors.hpp"
#include "lcp/exact_maps.hpp"

using namespace lcp;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lcp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
  return parts;
}

}  // namespace

TEST_CASE("point and preset parsing") {
  CHECK(cli::parse_point("0.5,-2") == Complex(0.5, -2.0));
  CHECK(cli::parse_point("1e-3,4") == Complex(1e-3, 4.0));
  CHECK_THROWS_AS(cli::parse_point("1;2"), DomainError);
  CHECK_THROWS_AS(cli::parse_point("1,2,3"), DomainError);
  CHECK_THROWS_AS(cli::parse_point("a,b"), DomainError);
  CHECK(cli::preset("6-9-13").side_lengths()[1] == doctest::Approx(13.0));
  CHECK(std::abs(cli::preset("30-60-90").vertex(1) - exact::triangle_306090().kappa) < 1e-15);
  CHECK_THROWS_AS(cli::preset("square"), DomainError);
  CHECK(cli::parse_backend("sc") == cap::Backend::SchwarzChristoffel);
  CHECK_THROWS_AS(cli::parse_backend("magic"), DomainError);
}

TEST_CASE("center report schema and values") {
  const Result r = run({"center", "--preset", "6-9-13"});
  REQUIRE(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  const std::vector<std::string> keys{"triangle", "backend", "query", "point", "barycentric", "inner_radius",
                                      "distance_to_shortest_side", "evals", "tolerance_achieved"};
  const auto ordered = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> got;
  for (const auto& [k, v] : ordered.items()) got.push_back(k);
  CHECK(got == keys);
  CHECK(j["triangle"].size() == 3);
  CHECK(j["backend"] == "sc");
  CHECK(j["query"] == "least_capacity_point");
  CHECK(std::abs(j["point"][0].get<double>() - 0.929617) < 1e-5);
  CHECK(std::abs(j["point"][1].get<double>() - 1.842564) < 1e-5);
  CHECK(std::abs(j["inner_radius"].get<double>() - 1.979479) < 1e-5);
  // round trip through a generic parser
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("center: explicit vertices with the SC backend match the preset") {
  const Result a = run({"center", "--preset", "iso-right"});
  const Result b = run({"center", "0,0", "1,0", "0,1", "--backend", "sc"});
  REQUIRE(a.code == cli::kOk);
  REQUIRE(b.code == cli::kOk);
  const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(std::abs(ja["point"][0].get<double>() - 0.3011216108) < 1e-9);
  CHECK(std::abs(ja["point"][0].get<double>() - jb["point"][0].get<double>()) < 1e-6);
  CHECK(std::abs(ja["point"][1].get<double>() - jb["point"][1].get<double>()) < 1e-6);
  CHECK(jb["backend"] == "sc");
}

TEST_CASE("radius subcommand") {
  const Result c = run({"radius", "--preset", "6-9-13", "--at", "0.5555556,2.6293688"});
  REQUIRE(c.code == cli::kOk);
  CHECK(std::abs(nlohmann::json::parse(c.out)["inner_radius"].get<double>() - 1.802305) < 1e-5);
  const Result i = run({"radius", "--preset", "iso-right", "--at", "0.3011216,0.3011216"});
  REQUIRE(i.code == cli::kOk);
  CHECK(std::abs(nlohmann::json::parse(i.out)["inner_radius"].get<double>() - 0.3346161) < 1e-6);
  const Result x = run({"radius", "--preset", "iso-right", "--at", "2,2"});
  CHECK(x.code == cli::kUsage);
  CHECK_FALSE(x.err.empty());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"center"}).code == cli::kUsage);
  CHECK(run({"center", "0,0", "1,0"}).code == cli::kUsage);
  CHECK(run({"center", "0,0", "1,0", "2,0"}).code == cli::kUsage);
  CHECK(run({"center", "--preset", "iso-right", "--backend", "magic"}).code == cli::kUsage);
  CHECK(run({"center", "--preset", "6-9-13", "--backend", "sigma"}).code == cli::kUsage);
  CHECK(run({"radius", "--preset", "iso-right"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"verify", "--only", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("figure CSV") {
  const Result r = run({"figure", "--preset", "iso-right", "--format", "csv", "--samples", "64"});
  REQUIRE(r.code == cli::kOk);
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "curve_type,curve_id,sample_index,x,y");
  const Triangle t = cli::preset("iso-right");
  std::set<int> circles, rays;
  int rows = 0;
  while (std::getline(ss, line)) {
    const auto f = split(line, ',');
    REQUIRE(f.size() == 5);
    (f[0] == "circle" ? circles : rays).insert(std::stoi(f[1]));
    CHECK((f[0] == "circle" || f[0] == "ray"));
    const Complex p(std::stod(f[3]), std::stod(f[4]));
    CHECK(t.contains(p, 1e-8));
    // 17 significant digits, less any trailing zeros
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p.real());
    CHECK(f[3] == buf);
    ++rows;
  }
  CHECK(circles.size() == 10);
  CHECK(rays.size() == 24);
  CHECK(rows == 34 * 64);
}

TEST_CASE("figure defaults to the least capacity point") {
  const Result r = run({"figure", "--preset", "30-60-90", "--format", "csv", "--samples", "16", "--rays", "2",
                        "--circles", "1"});
  REQUIRE(r.code == cli::kOk);
  std::stringstream ss(r.out);
  std::string line;
  std::getline(ss, line);
  Complex start;
  while (std::getline(ss, line)) {
    const auto f = split(line, ',');
    if (f[0] == "ray" && f[2] == "0") {
      start = Complex(std::stod(f[3]), std::stod(f[4]));
      break;
    }
  }
  const double k = exact::triangle_306090().kappa;
  CHECK(std::abs(start.real() / k - 0.3599371272) < 1e-8);
  CHECK(std::abs(start.imag() / k - 0.4062604057) < 1e-8);
}

TEST_CASE("figure SVG to a file") {
  const auto path = std::filesystem::temp_directory_path() / "lcp_test_figure.svg";
  std::filesystem::remove(path);
  const Result r = run({"figure", "--preset", "6-9-13", "--format", "svg", "--samples", "32", "--out", path.string()});
  REQUIRE(r.code == cli::kOk);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  std::filesystem::remove(path);
  CHECK(run({"figure", "--preset", "iso-right", "--out", "/nonexistent-dir/x.csv"}).code == cli::kUsage);
}

TEST_CASE("verify subcommand") {
  const Result s = run({"verify", "--only", "sigma"});
  CHECK(s.code == cli::kOk);
  CHECK(s.out.find("C1  PASS") != std::string::npos);
  CHECK(s.out.find("C7") == std::string::npos);
  const Result loose = run({"verify", "--only", "constants", "--tol", "1e-3"});
  CHECK(loose.code == cli::kOk);
  CHECK(loose.out.find("FAIL") == std::string::npos);
  const Result strict = run({"verify", "--only", "constants", "--tol", "1e-30"});
  CHECK(strict.code == cli::kVerifyFailed);
}
