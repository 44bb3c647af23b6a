#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/poset.hpp"

namespace semiord {

struct Traces {
  QuasiOrder pred;  // x <=_pred y iff every z < x has z < y
  QuasiOrder succ;  // x <=_succ y iff every z > y has z > x
};

Traces traces(const Poset& p);

// Incomparable ordered pairs (x, y) with D(x) subset D(y) and U(y) subset U(x).
std::vector<std::pair<int, int>> critical_pairs(const Poset& p);

struct ForbiddenWitness {
  std::string pattern;        // "2+2", "3+1" or "1+2"
  std::vector<int> elements;  // host indices, in pattern element order
};

struct Classification {
  bool is_chain = false;
  bool is_weak = false;
  bool is_interval = false;
  bool is_semiorder = false;
  bool is_threshold = false;
  // A 2+2 (if any), else a 3+1 (if any), else a 1+2 (if any).
  std::optional<ForbiddenWitness> forbidden_witness;
  // Pattern-based and trace-based recognition concur.  classify() throws
  // CriteriaDisagreement instead of ever returning false here.
  bool criteria_agree = true;
};

// Recognition with both criteria run and cross-checked:
//   interval  <=>  no 2+2        <=>  <=_pred total
//   semiorder <=>  no 2+2, 3+1   <=>  pred /\ succ total
//                                <=>  every incomparable pair critically oriented
//   weak      <=>  no 1+2
//   threshold <=>  pred == succ, both total orders
Classification classify(const Poset& p);

// Least number of antichains covering p; equals the longest chain size.
int antichain_cover_number(const Poset& p);

}  // namespace semiord
