#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semiord/poset.hpp"
#include "semiord/rational.hpp"

namespace semiord {

// x < y  iff  right(x) < left(y); incomparable elements overlap.
struct IntervalRepresentation {
  std::vector<std::pair<Rational, Rational>> intervals;  // (left, right), left <= right
};

// x < y  iff  r(y) - r(x) >= 1 (attained threshold, fixed at 1).
struct UnitRepresentation {
  std::vector<Rational> offset;
};

struct Realizer {
  // Each order lists element indices from least to greatest; every one is a
  // linear extension and their intersection is the represented order.
  std::vector<std::vector<int>> orders;
};

// Left ranks come from the <=_pred classes, right ranks from <=_succ.
// Throws NotIntervalOrder.
IntervalRepresentation interval_representation(const Poset& p);
Poset poset_from_intervals(const IntervalRepresentation& rep);

// Difference-constraint solve over exact rationals with slack 1/(n+1).
// Throws NotSemiorder; InfeasibleSystem cannot fire on a genuine semiorder.
UnitRepresentation unit_representation(const Poset& p);
Poset poset_from_unit(const UnitRepresentation& rep);

// The three-linear-order realizer for a finite piece of a threshold order
// x < y iff key(y) - key(x) >= alpha.  keys must be injective, alpha > 0.
// Throws InvalidKey, NonPositiveAlpha.
Realizer realizer_dim3_threshold(const std::vector<Rational>& keys, const Rational& alpha);

// The threshold order the realizer represents, as a Poset on the same indices.
Poset threshold_poset(const std::vector<Rational>& keys, const Rational& alpha);

// True iff each order extends p and their intersection equals p exactly.
bool realizer_matches(const Realizer& r, const Poset& p);

// Least k <= max_k with k linear extensions intersecting to p, or nullopt
// (Exceeded).  Exhaustive over linear extensions; intended for n <= 8.
std::optional<int> brute_force_dimension(const Poset& p, int max_k);

}  // namespace semiord
