#pragma once

#include <vector>

#include "semiord/poset.hpp"

namespace semiord {

// All posets on exactly n labeled elements that are transitively closed and
// compatible with the natural labeling, deduplicated up to isomorphism.
// Deterministic order.  Feasible through n = 7 (2045 classes).
std::vector<Poset> poset_classes(int n);

// Union of poset_classes(1..max_n).
std::vector<Poset> poset_corpus(int max_n);

}  // namespace semiord
