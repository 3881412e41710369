#include <cstdio>
#include <fstream>
#include <iostream>

#include "wexp/verify.hpp"

using namespace wexp;

// Runs criteria 1-9 with their pinned windows and time limits. An optional
// argument names a file for the JSON report.
int main(int argc, char** argv) {
  VerifyConfig cfg;
  bool ok = true;
  nlohmann::json report = nlohmann::json::array();
  run_suites(cfg, {}, [&](const SuiteResult& r) {
    char limit[32] = "none";
    if (r.limit > 0) std::snprintf(limit, sizeof limit, "%.0fs", r.limit);
    std::printf("criterion %d: %s  %s  (%ld checks, %.2fs, limit %s)\n", r.criterion, r.pass() ? "PASS" : "FAIL",
                r.name.c_str(), r.checks, r.seconds, limit);
    if (!r.within_limit()) std::printf("    time limit exceeded\n");
    for (size_t i = 0; i < r.failures.size() && i < 20; ++i) std::printf("    %s\n", r.failures[i].c_str());
    std::fflush(stdout);
    ok = ok && r.pass();
    report.push_back(r.to_json());
  });
  if (argc > 1) std::ofstream(argv[1]) << report.dump(2) << "\n";
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 1;
}
