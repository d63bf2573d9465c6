// Acceptance criteria C1..C10: one PASS/FAIL line each, exit status 1 on any
// failure. Tolerances live next to each check in src/verify/suite.cpp.
#include <cstdio>
#include <iostream>

#include "lcp/verify.hpp"

int main(int argc, char** argv) {
  const bool details = argc > 1 && std::string(argv[1]) == "--details";
  const auto rows = lcp::verify::run_suite();
  int failed = 0;
  for (const auto& row : rows) {
    std::printf("%s C%d %s (%.2fs)\n", row.pass() ? "PASS" : "FAIL", row.id, row.title.c_str(), row.seconds);
    if (!row.error.empty()) std::printf("     error: %s\n", row.error.c_str());
    for (const auto& c : row.checks)
      if (details || !c.pass) std::printf("     %s %-50s %.3e (tol %.0e)\n", c.pass ? "ok  " : "FAIL", c.name.c_str(), c.error, c.tol);
    failed += !row.pass();
  }
  std::printf("%zu criteria, %d failed\n", rows.size(), failed);
  return failed == 0 ? 0 : 1;
}
