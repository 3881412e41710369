#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace wexp {

struct SuiteResult {
  int criterion = 0;
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  double limit = 0;  // seconds; 0 means no limit
  bool skipped = false;
  nlohmann::json details = nlohmann::json::object();

  void check(bool ok, const std::string& what);
  bool within_limit() const { return limit <= 0 || seconds < limit; }
  bool pass() const { return failures.empty() && within_limit(); }
  nlohmann::json to_json() const;
};

// Empty groups or q_list and bound 0 select the defaults of each suite.
struct VerifyConfig {
  std::vector<std::string> groups;
  int bound = 0;
  std::vector<int> q_list;
  uint64_t seed = 1;
  int hecke_triples = 500;
  bool enforce_limits = true;
};

SuiteResult suite_weyl(const VerifyConfig& cfg);          // 1
SuiteResult suite_hecke(const VerifyConfig& cfg);         // 2
SuiteResult suite_cell_table(const VerifyConfig& cfg);    // 3
SuiteResult suite_fiber(const VerifyConfig& cfg);         // 4
SuiteResult suite_dimension(const VerifyConfig& cfg);     // 5
SuiteResult suite_oracle(const VerifyConfig& cfg);        // 6
SuiteResult suite_rank_one(const VerifyConfig& cfg);      // 7
SuiteResult suite_whittaker(const VerifyConfig& cfg);     // 8
SuiteResult suite_truncation(const VerifyConfig& cfg);    // 9

using SuiteFn = std::function<SuiteResult(const VerifyConfig&)>;
const std::vector<std::pair<int, SuiteFn>>& all_suites();
// Runs the selected criteria (all when empty), calling report after each.
std::vector<SuiteResult> run_suites(const VerifyConfig& cfg, const std::set<int>& which,
                                    const std::function<void(const SuiteResult&)>& report = {});

}  // namespace wexp
