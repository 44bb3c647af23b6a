#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/bitrel.hpp"

namespace semiord {

// Finite poset as a strict-order matrix.  Constructors keep the invariant
// that lt is irreflexive and transitive; violating inputs are rejected.
class Poset {
 public:
  Poset() = default;
  // Takes a relation that must already be a strict order (checked).
  explicit Poset(BitRel lt, std::vector<std::string> labels = {});

  int size() const { return lt_.size(); }
  bool less(int i, int j) const { return lt_.get(i, j); }
  bool comparable(int i, int j) const { return lt_.get(i, j) || lt_.get(j, i); }
  bool incomparable(int i, int j) const { return i != j && !comparable(i, j); }

  const BitRel& relation() const { return lt_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Number of ordered pairs i < j.
  int pair_count() const;

  std::vector<int> down_set(int i) const;  // {z : z < i}
  std::vector<int> up_set(int i) const;    // {z : i < z}

  // Induced subposet on the given (distinct, in-range) elements.
  Poset induced(const std::vector<int>& elements) const;

 private:
  BitRel lt_;
  std::vector<std::string> labels_;
};

// edges are ordered pairs (i, j) meaning i < j; the transitive closure is
// applied.  Throws IndexError for out-of-range indices, CycleError when the
// closure would force i < i.
Poset build_poset(int n, const std::vector<std::pair<int, int>>& edges);

// Canonical small posets.
Poset chain(int n);
Poset antichain(int n);
// Direct sum of chains with p and q elements.
Poset chain_sum(int p, int q);
Poset two_plus_two();
Poset three_plus_one();
Poset one_plus_chain(int n);  // 1 (+) n
// The 6-element standard example: minimal a0,a1,a2, maximal b0,b1,b2,
// ai < bj iff i != j.  Classical dimension-3 witness.
Poset crown_s3();

struct PatternMatch {
  bool found = false;
  // witness[p] = host index of pattern element p; preserves and reflects <.
  std::vector<int> witness;
};

// Order-embedding search: injective f with p <_pattern q  iff  f(p) <_host f(q).
// Deterministic backtracking; the returned witness is the lexicographically
// least one under the search order.
PatternMatch embeds_pattern(const Poset& host, const Poset& pattern);

// Lexicographical sum: substitute components[i] for element i of the index
// poset.  Throws ArityError when components.size() != index.size().
Poset lex_sum(const Poset& index, const std::vector<Poset>& components);

struct IncComponents {
  // Connected components of the incomparability graph, listed in the induced
  // total order (parts[0] below parts[1] below ...).  Element order within a
  // part is ascending.
  std::vector<std::vector<int>> parts;
};

IncComponents incomparability_components(const Poset& p);

struct SubsetProperties {
  bool autonomous = false;
  bool convex = false;
  bool antichain = false;
  bool chain = false;
};

SubsetProperties subset_properties(const Poset& p, const std::vector<int>& subset);

// Reflexive-transitive relation matrix.
class QuasiOrder {
 public:
  QuasiOrder() = default;
  explicit QuasiOrder(BitRel le);  // must be reflexive and transitive (checked)

  int size() const { return le_.size(); }
  bool le(int i, int j) const { return le_.get(i, j); }
  bool lt(int i, int j) const { return le_.get(i, j) && !le_.get(j, i); }
  bool equiv(int i, int j) const { return le_.get(i, j) && le_.get(j, i); }
  bool is_total() const;
  bool is_antisymmetric() const;
  const BitRel& relation() const { return le_; }

  friend bool operator==(const QuasiOrder& a, const QuasiOrder& b) {
    return a.le_ == b.le_;
  }

 private:
  BitRel le_;
};

// Intersection of two quasi-orders on the same ground set.
QuasiOrder intersect(const QuasiOrder& a, const QuasiOrder& b);

// Collapses the mutual-le classes of q to a poset; projection maps each
// element to its class index.  Class indices follow the least element.
std::pair<Poset, std::vector<int>> quotient_by_equiv(const QuasiOrder& q);

bool isomorphic(const Poset& a, const Poset& b);

}  // namespace semiord
