#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiord/cmp.hpp"
#include "semiord/poset.hpp"

namespace semiord {

using Vec = std::vector<long long>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(long long k, const Vec& a);
std::string vec_str(const Vec& a);

// Compatible total order on Z^n given by an invertible integer matrix:
// x precedes y iff (row_i . x) is lexicographically below (row_i . y).
class WeightOrder {
 public:
  WeightOrder() = default;
  WeightOrder(int dim, std::vector<Vec> rows);  // throws DimensionError if singular

  int dim() const { return dim_; }
  const std::vector<Vec>& rows() const { return rows_; }

  Cmp compare(const Vec& x, const Vec& y) const;
  bool lt(const Vec& x, const Vec& y) const { return compare(x, y) == Cmp::Less; }
  bool le(const Vec& x, const Vec& y) const { return compare(x, y) != Cmp::Greater; }

  // Number of leading rows whose dot product with x vanishes.
  int leading_zeros(const Vec& x) const;

  // Plain lexicographic order by coordinates.
  static WeightOrder lex(int dim);

 private:
  int dim_ = 0;
  std::vector<Vec> rows_;
};

// Principal final segment of a weight order: {x : theta <= x} (closed) or
// {x : theta < x} (open).
struct FinalSegment {
  Vec theta;
  bool closed = true;
};

struct Window {
  std::vector<std::pair<long long, long long>> bounds;  // inclusive, must contain 0

  int dim() const { return static_cast<int>(bounds.size()); }
  bool contains(const Vec& v) const;
  long long cell_count() const;
  // Throws WindowTooLarge beyond the cap.
  std::vector<Vec> enumerate(long long cap = 200000) const;
  // Shrink every bound inward by margin[i] (clamped to keep 0).
  Window interior(const Vec& margin) const;
  // Hull of W with 2(W - W); large enough to contain the translated pattern
  // witnesses of the transfer theorem.
  Window grown_for_transfer() const;

  static Window cube(int dim, long long lo, long long hi);
};

class ZnGroup;

// A concretely represented group with a compatible partial order.
class GroupOrder {
 public:
  virtual ~GroupOrder() = default;

  virtual int dim() const = 0;
  virtual bool lt(const Vec& x, const Vec& y) const = 0;  // strict order
  bool le(const Vec& x, const Vec& y) const;

  // Group operations; cyclic coordinates are reduced into [0, k).
  virtual Vec add(const Vec& x, const Vec& y) const;
  virtual Vec sub(const Vec& x, const Vec& y) const;
  virtual Vec neg(const Vec& x) const;
  virtual Vec zero() const;
  virtual Vec normalize(const Vec& x) const { return x; }

  // Per-coordinate interior margin: trace and cover computations only trust
  // window elements at least this far from the boundary.
  virtual Vec margin() const = 0;

  virtual std::string describe() const = 0;
  virtual const ZnGroup* as_zn() const { return nullptr; }
  // theta of the attained-threshold presentation, when the carrier exposes one.
  virtual std::optional<Vec> attained_threshold() const { return std::nullopt; }
  // [lo, hi] for coordinates whose range the carrier fixes (cyclic residues).
  virtual std::optional<std::pair<long long, long long>> fixed_range(int) const {
    return std::nullopt;
  }

  void check_dim(const Vec& v) const;
};

using GroupPtr = std::shared_ptr<const GroupOrder>;

// Z^n with a weight total order and a principal threshold segment:
// x < y iff y - x in F.
class ZnGroup final : public GroupOrder {
 public:
  ZnGroup(WeightOrder order, FinalSegment threshold);

  int dim() const override { return order_.dim(); }
  bool lt(const Vec& x, const Vec& y) const override;
  Vec margin() const override;
  std::string describe() const override;
  const ZnGroup* as_zn() const override { return this; }
  std::optional<Vec> attained_threshold() const override;

  const WeightOrder& order() const { return order_; }
  const FinalSegment& threshold() const { return threshold_; }
  bool segment_contains(const Vec& v) const;
  // Membership in inc(0) u {0}:  -theta < v < theta (closed) / <= (open).
  bool inc_interval_contains(const Vec& v) const;

 private:
  WeightOrder order_;
  FinalSegment threshold_;
};

// Direct product F x G compared inner-first:
// (a,b) < (a',b') iff b < b' in G, or b = b' and a < a' in F.
// With an unordered factor (cyclic Z/k) the tie case never fires: the order
// is the lexicographical sum over G of |F|-antichains.
class LexProdGroup final : public GroupOrder {
 public:
  // Unordered cyclic factor Z/k (k >= 1).
  LexProdGroup(long long cyclic_k, GroupPtr inner);
  // Ordered factor.
  LexProdGroup(GroupPtr factor, GroupPtr inner);

  int dim() const override;
  bool lt(const Vec& x, const Vec& y) const override;
  Vec normalize(const Vec& x) const override;
  Vec margin() const override;
  std::string describe() const override;
  std::optional<Vec> attained_threshold() const override;
  std::optional<std::pair<long long, long long>> fixed_range(int coord) const override;

  bool factor_ordered() const { return factor_ != nullptr; }
  long long cyclic_k() const { return cyclic_k_; }
  const GroupOrder& inner() const { return *inner_; }
  int factor_dim() const { return factor_ ? factor_->dim() : 1; }

 private:
  long long cyclic_k_ = 0;  // 0 when the factor is ordered
  GroupPtr factor_;
  GroupPtr inner_;
};

// A odot_{F,alpha} G: (a,b) < (a',b') iff b + alpha < b' in G, or
// b' = b + alpha and a' - a in F.  A is Z with a weight order, F a final
// segment of it (0 allowed); G must be a threshold group with attained
// threshold alpha.
class OdotGroup final : public GroupOrder {
 public:
  OdotGroup(WeightOrder a_order, FinalSegment f, GroupPtr inner, Vec alpha);

  int dim() const override;
  bool lt(const Vec& x, const Vec& y) const override;
  Vec margin() const override;
  std::string describe() const override;

  const GroupOrder& inner() const { return *inner_; }
  const Vec& alpha() const { return alpha_; }
  const FinalSegment& f() const { return f_; }
  const WeightOrder& a_order() const { return a_order_; }

 private:
  WeightOrder a_order_;
  FinalSegment f_;
  GroupPtr inner_;
  Vec alpha_;
};

struct WindowPoset {
  Poset poset;
  std::vector<Vec> elements;  // index -> coordinates
  int index_of_zero = -1;
  int index_of(const Vec& v) const;  // -1 if absent
};

// Ranges for the carrier's free (non-cyclic) coordinates, in element order;
// cyclic coordinates get their full residue range automatically.
Window make_window(const GroupOrder& g,
                   const std::vector<std::pair<long long, long long>>& free_ranges);

WindowPoset window_poset(const GroupOrder& g, const Window& w, long long cap = 200000);

// Elements x != 0 in the window with neither 0 <= x nor x <= 0.
std::vector<Vec> inc0(const GroupOrder& g, const Window& w);

struct ConeReport {
  bool contains_zero = false;
  bool closed_under_addition = false;
  bool antisymmetric = false;
  bool normality_trivial = true;  // abelian carriers
  std::optional<std::pair<Vec, Vec>> addition_failure;
  std::optional<Vec> antisymmetry_failure;
  bool ok() const { return contains_zero && closed_under_addition && antisymmetric; }
};

// Checks cone axioms inside the window (sums leaving the window are skipped).
ConeReport validate_cone(const std::function<bool(const Vec&)>& cone, const Window& w);

struct SubgroupDesc {
  int j = 0;  // H_j = kernel of the first n-j weight rows; H_0 = {0}, H_n = Z^n
  std::string text;
};

struct SubgroupReport {
  SubgroupDesc K, A, I;
  bool k_window_ok = false;
  bool a_window_ok = false;
  bool i_window_ok = false;
  bool window_cross_check() const { return k_window_ok && a_window_ok && i_window_ok; }
};

// Exact K(G), A(G), I(G)(0) for Z^n weight orders with principal thresholds,
// cross-checked against window evidence.  Throws UnsupportedCarrier.
SubgroupReport subgroups_KAI(const GroupOrder& g, const Window& w);

// Does x lie in H_j of the weight order's convex-subgroup chain?
bool in_convex_subgroup(const ZnGroup& g, int j, const Vec& x);

struct ThresholdReport {
  bool pred_total = false;
  bool pred_antisymmetric = false;
  bool pred_matches_weight_order = true;  // Zn carriers only
  bool k_trivial = true;                  // Zn carriers only
  int interior_size = 0;
  bool confirmed() const {
    return pred_total && pred_antisymmetric && pred_matches_weight_order && k_trivial;
  }
};

// margin_override replaces the carrier-derived interior margin when given.
ThresholdReport verify_threshold(const GroupOrder& g, const Window& w,
                                 const std::optional<Vec>& margin_override = std::nullopt);

struct TransferRow {
  int q = 0, p = 0;   // pattern (q+1) (+) p
  bool embeds = false;
};

struct TransferReport {
  int n = 0;
  bool one_plus_n_embeds = false;
  std::vector<TransferRow> rows;
  bool grew_window = false;
  bool violation = false;
  std::string detail;
};

// Theorem-transfer check: 1 (+) n and every (q+1) (+) p with p+q=n must
// co-occur.  On disagreement the window grows once before flagging.
TransferReport pattern_transfer_check(const GroupOrder& g, const Window& w, int n);

// Compatibility sampling: lt(x,y) => lt(x+z, y+z), both translation sides.
bool compatibility_sample(const GroupOrder& g, long long coord_bound, int samples,
                          unsigned long long seed);

}  // namespace semiord
