#include <algorithm>
#include <cstdio>
#include <ostream>

#include "lcp/cli.hpp"

namespace lcp::cli {

namespace {

nlohmann::ordered_json xy(Complex z) { return nlohmann::ordered_json::array({z.real(), z.imag()}); }

}  // namespace

nlohmann::ordered_json report_json(const cap::CapacityReport& r) {
  nlohmann::ordered_json tri = nlohmann::ordered_json::array();
  for (Complex v : r.triangle.vertices()) tri.push_back(xy(v));
  return {
      {"triangle", tri},
      {"backend", std::string(cap::to_string(r.backend))},
      {"query", std::string(cap::to_string(r.query))},
      {"point", xy(r.point)},
      {"barycentric", {r.barycentric.b1, r.barycentric.b2, r.barycentric.b3}},
      {"inner_radius", r.inner_radius},
      {"distance_to_shortest_side", r.distance_to_shortest_side},
      {"evals", r.evals},
      {"tolerance_achieved", r.tolerance_achieved},
  };
}

void write_csv(std::ostream& os, const cap::FigureGeometry& fig) {
  os << "curve_type,curve_id,sample_index,x,y\n";
  char buf[128];
  auto emit = [&](const char* type, const std::vector<std::vector<Complex>>& curves) {
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (std::size_t i = 0; i < curves[c].size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s,%zu,%zu,%.17g,%.17g\n", type, c, i, curves[c][i].real(),
                      curves[c][i].imag());
        os << buf;
      }
  };
  emit("circle", fig.circle_images);
  emit("ray", fig.ray_images);
}

void write_svg(std::ostream& os, const Triangle& tri, const cap::FigureGeometry& fig) {
  double x0 = tri.vertex(0).real(), x1 = x0, y0 = tri.vertex(0).imag(), y1 = y0;
  for (Complex v : tri.vertices()) {
    x0 = std::min(x0, v.real());
    x1 = std::max(x1, v.real());
    y0 = std::min(y0, v.imag());
    y1 = std::max(y1, v.imag());
  }
  const double size = 800.0;
  const double pad = 0.03 * std::max(x1 - x0, y1 - y0);
  const double scale = size / (std::max(x1 - x0, y1 - y0) + 2.0 * pad);
  const double w = (x1 - x0 + 2.0 * pad) * scale, h = (y1 - y0 + 2.0 * pad) * scale;
  // SVG y grows downwards.
  auto px = [&](Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", (z.real() - x0 + pad) * scale, (y1 + pad - z.imag()) * scale);
    return std::string(buf);
  };
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.3f %.3f\">\n",
                w, h, w, h);
  os << buf << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  auto polyline = [&](const std::vector<Complex>& pts, const char* style) {
    os << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << px(pts[i]);
    os << "\"/>\n";
  };
  for (const auto& c : fig.ray_images) polyline(c, "stroke=\"#888\" stroke-width=\"0.8\"");
  for (const auto& c : fig.circle_images) polyline(c, "stroke=\"#1f4e9c\" stroke-width=\"1.2\"");
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" << px(tri.vertex(0)) << ' '
     << px(tri.vertex(1)) << ' ' << px(tri.vertex(2)) << "\"/>\n";
  const std::string c = px(fig.center);
  const auto comma = c.find(',');
  os << "<circle cx=\"" << c.substr(0, comma) << "\" cy=\"" << c.substr(comma + 1)
     << "\" r=\"3\" fill=\"crimson\"/>\n";
  os << "</svg>\n";
}

}  // namespace lcp::cli
