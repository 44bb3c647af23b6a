// Acceptance suite: runs every acceptance criterion at its stated scale and
// prints one pass/fail line per criterion.  Exit 0 iff everything passed.

#include <cstdio>
#include <cstring>

#include "semiord/verify.hpp"

int main(int argc, char** argv) {
  semiord::VerifyOptions opts;
  opts.corpus_max_n = 6;
  opts.dimension_max_n = 7;
  opts.clifford_fuzz = 10000;
  opts.clifford_relation_samples = 1000;
  opts.group_specs = 200;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      opts.dimension_max_n = 6;
      opts.clifford_fuzz = 1000;
      opts.clifford_relation_samples = 100;
      opts.group_specs = 50;
    }
  }

  const auto results = semiord::run_verification(opts);
  bool all = true;
  double total = 0.0;
  for (const auto& r : results) {
    std::printf("[%s] %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds);
    if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
    all = all && r.pass;
    total += r.seconds;
  }
  std::printf("%s in %.2fs\n", all ? "acceptance: all criteria passed" : "acceptance: FAILURES",
              total);
  return all ? 0 : 1;
}
