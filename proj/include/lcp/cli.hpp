#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "lcp/capacity.hpp"
#include "lcp/triangle.hpp"

namespace lcp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNotConverged = 2, kVerifyFailed = 3 };

/// iso-right (0, 1, i), 30-60-90 (0, k30, i sqrt3 k30), 6-9-13 (0, 6, -13/3 + 4 sqrt35 / 3 i).
Triangle preset(std::string_view name);
/// "x,y" -> x + iy. Throws DomainError on malformed input.
Complex parse_point(std::string_view text);
cap::Backend parse_backend(std::string_view name);

nlohmann::ordered_json report_json(const cap::CapacityReport& r);
/// curve_type,curve_id,sample_index,x,y with 17 significant digits.
void write_csv(std::ostream& os, const cap::FigureGeometry& fig);
void write_svg(std::ostream& os, const Triangle& tri, const cap::FigureGeometry& fig);

/// Entry point of the `lcp` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcp::cli
