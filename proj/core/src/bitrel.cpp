#include "semiord/bitrel.hpp"

namespace semiord {

void BitRel::transitive_close() {
  // Warshall with word-parallel row merges.
  for (int k = 0; k < n_; ++k) {
    for (int i = 0; i < n_; ++i) {
      if (get(i, k)) row_or(i, k);
    }
  }
}

bool BitRel::is_irreflexive() const {
  for (int i = 0; i < n_; ++i)
    if (get(i, i)) return false;
  return true;
}

bool BitRel::is_reflexive() const {
  for (int i = 0; i < n_; ++i)
    if (!get(i, i)) return false;
  return true;
}

bool BitRel::is_transitive() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j) && !row_subset(j, i)) return false;
  return true;
}

}  // namespace semiord
