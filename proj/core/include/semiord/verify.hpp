#pragma once

#include <string>
#include <vector>

namespace semiord {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  int corpus_max_n = 6;     // criteria 1 and 2
  int dimension_max_n = 7;  // criterion 3 corpus bound
  int clifford_fuzz = 10000;
  int clifford_relation_samples = 1000;
  int group_specs = 200;  // criterion 6 sample count
  unsigned long long seed = 20250810;
  bool include_module_invariants = true;
};

// The acceptance criteria, in order, plus (optionally) the per-module
// invariant suites.  Every check is deterministic under a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace semiord
