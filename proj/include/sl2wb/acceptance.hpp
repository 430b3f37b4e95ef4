#pragma once

#include "sl2wb/report.hpp"

#include <string>
#include <vector>

namespace sl2wb {

struct AcceptanceOptions {
  /// The fast suite skips the determinism re-runs (criterion 10).
  bool fast = false;
  unsigned parallelism = 1;
  std::size_t delta_budget = DeltaOptions{}.budget;
};

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool skipped = false;
  bool pass = false;
  std::string detail;
  Json data;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceReport {
  std::string suite;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
  /// Deterministic: wall-clock timings are left out.
  Json to_json() const;
  /// One "criterion N: PASS|FAIL|SKIP ..." line each.
  std::string summary_lines(bool with_timings) const;
};

AcceptanceReport run_acceptance(const AcceptanceOptions& options = {});

} // namespace sl2wb
