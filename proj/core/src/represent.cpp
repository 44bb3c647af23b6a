#include "semiord/represent.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

#include "semiord/classify.hpp"
#include "semiord/errors.hpp"

namespace semiord {

namespace {

// Rank of each element among the equivalence classes of a total quasi-order.
std::vector<int> class_ranks(const QuasiOrder& q) {
  const int n = q.size();
  std::vector<int> rank(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.lt(y, x)) ++rank[x];
  // rank counts strictly-below elements; normalize to dense class indices
  std::vector<int> vals(rank);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  for (int x = 0; x < n; ++x)
    rank[x] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), rank[x]) - vals.begin());
  return rank;
}

}  // namespace

IntervalRepresentation interval_representation(const Poset& p) {
  if (!classify(p).is_interval) throw NotIntervalOrder("poset embeds 2+2");
  const Traces t = traces(p);
  const std::vector<int> left = class_ranks(t.pred);
  const std::vector<int> right = class_ranks(t.succ);
  IntervalRepresentation rep;
  rep.intervals.reserve(p.size());
  for (int x = 0; x < p.size(); ++x)
    rep.intervals.emplace_back(Rational(left[x]), Rational(right[x]));
  // The rank construction realizes the order exactly; anything else is a bug.
  for (int x = 0; x < p.size(); ++x) {
    if (rep.intervals[x].first > rep.intervals[x].second)
      throw CriteriaDisagreement("interval representation produced left > right");
    for (int y = 0; y < p.size(); ++y)
      if (x != y && p.less(x, y) != (rep.intervals[x].second < rep.intervals[y].first))
        throw CriteriaDisagreement("interval representation failed its invariant");
  }
  return rep;
}

Poset poset_from_intervals(const IntervalRepresentation& rep) {
  const int n = static_cast<int>(rep.intervals.size());
  BitRel r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && rep.intervals[x].second < rep.intervals[y].first) r.set(x, y);
  return Poset(std::move(r));
}

UnitRepresentation unit_representation(const Poset& p) {
  if (!classify(p).is_semiorder) throw NotSemiorder("poset embeds 2+2 or 3+1");
  const int n = p.size();
  UnitRepresentation rep;
  if (n == 0) return rep;

  // Difference constraints, solved by Bellman-Ford from a virtual source:
  //   x < y            ->  r(y) - r(x) >= 1       (edge y -> x, weight -1)
  //   x, y incomparable -> |r(y) - r(x)| <= 1-eps  (edges both ways, 1-eps)
  const Rational eps(1, n + 1);
  const Rational slack = Rational(1) - eps;
  struct Edge { int from, to; Rational w; };
  std::vector<Edge> edges;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (p.less(x, y)) edges.push_back({y, x, Rational(-1)});
      else if (x < y && p.incomparable(x, y)) {
        edges.push_back({x, y, slack});
        edges.push_back({y, x, slack});
      }
    }
  }
  // Virtual source feeds 0 to all n vertices; distances stabilize within n
  // rounds, so a change in round n proves a negative cycle.
  std::vector<Rational> dist(n, Rational(0));
  bool changed = true;
  for (int pass = 0; pass <= n && changed; ++pass) {
    changed = false;
    for (const Edge& e : edges) {
      Rational cand = dist[e.from] + e.w;
      if (cand < dist[e.to]) { dist[e.to] = cand; changed = true; }
    }
    if (changed && pass == n)
      throw InfeasibleSystem("negative cycle in a semiorder's unit constraints");
  }
  rep.offset = std::move(dist);

  // Scott-Suppes round trip, enforced at the source.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rational d = rep.offset[y] - rep.offset[x];
      if (p.less(x, y) != (d >= 1))
        throw InfeasibleSystem("unit representation failed its invariant");
    }
  return rep;
}

Poset poset_from_unit(const UnitRepresentation& rep) {
  const int n = static_cast<int>(rep.offset.size());
  BitRel r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && rep.offset[y] - rep.offset[x] >= 1) r.set(x, y);
  return Poset(std::move(r));
}

namespace {

// Index of the half-open block ]k*alpha, (k+1)*alpha] containing key.
Int block_index(const Rational& key, const Rational& alpha) {
  return rat_ceil(key / alpha) - 1;
}

}  // namespace

Poset threshold_poset(const std::vector<Rational>& keys, const Rational& alpha) {
  const int n = static_cast<int>(keys.size());
  BitRel r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && keys[y] - keys[x] >= alpha) r.set(x, y);
  return Poset(std::move(r));
}

Realizer realizer_dim3_threshold(const std::vector<Rational>& keys, const Rational& alpha) {
  if (alpha <= 0) throw NonPositiveAlpha("alpha must be positive");
  const int n = static_cast<int>(keys.size());
  {
    std::set<Rational> distinct(keys.begin(), keys.end());
    if (static_cast<int>(distinct.size()) != n) throw InvalidKey("keys must be injective");
  }

  // L1: blocks ]k*alpha, (k+1)*alpha], reversed key inside each block.
  auto l1_less = [&](int a, int b) {
    const Int ba = block_index(keys[a], alpha), bb = block_index(keys[b], alpha);
    if (ba != bb) return ba < bb;
    return keys[a] > keys[b];
  };
  // L2/L3: double blocks ](2k+off)*alpha, (2k+2+off)*alpha]; inside a block,
  // cross-half pairs keep their orientation exactly when comparable, and
  // same-half pairs follow the key.
  auto swapped_less = [&](int off) {
    return [&, off](int a, int b) {
      const Rational sa = keys[a] - off * alpha, sb = keys[b] - off * alpha;
      const Int ba = rat_ceil(sa / (2 * alpha)) - 1, bb = rat_ceil(sb / (2 * alpha)) - 1;
      if (ba != bb) return ba < bb;
      const Rational mid = Rational(2 * ba + 1 + off) * alpha;  // block base + alpha
      const bool lower_a = keys[a] <= mid, lower_b = keys[b] <= mid;
      if (lower_a == lower_b) return keys[a] < keys[b];
      if (lower_a) return keys[b] - keys[a] >= alpha;
      return !(keys[a] - keys[b] >= alpha);
    };
  };

  Realizer out;
  for (int which = 0; which < 3; ++which) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (which == 0) std::sort(order.begin(), order.end(), l1_less);
    else std::sort(order.begin(), order.end(), swapped_less(which - 1));
    out.orders.push_back(std::move(order));
  }
  return out;
}

bool realizer_matches(const Realizer& r, const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<int>> pos(r.orders.size(), std::vector<int>(n));
  for (std::size_t k = 0; k < r.orders.size(); ++k) {
    if (static_cast<int>(r.orders[k].size()) != n) return false;
    for (int i = 0; i < n; ++i) pos[k][r.orders[k][i]] = i;
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      bool inter = true;
      for (std::size_t k = 0; k < r.orders.size(); ++k)
        if (pos[k][x] > pos[k][y]) { inter = false; break; }
      if (p.less(x, y) && !inter) return false;  // not an extension
      if (inter != p.less(x, y)) return false;   // intersection differs
    }
  }
  return true;
}

namespace {

void enumerate_extensions(const Poset& p, std::vector<int>& prefix,
                          std::uint32_t used,
                          const std::vector<std::uint32_t>& preds,
                          const std::vector<std::pair<int, int>>& incpairs,
                          std::set<std::uint32_t>& vectors) {
  const int n = p.size();
  if (static_cast<int>(prefix.size()) == n) {
    std::uint32_t v = 0;
    std::vector<int> at(n);
    for (int i = 0; i < n; ++i) at[prefix[i]] = i;
    for (std::size_t t = 0; t < incpairs.size(); ++t)
      if (at[incpairs[t].first] < at[incpairs[t].second]) v |= (1u << t);
    vectors.insert(v);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used & (1u << v)) continue;
    if ((preds[v] & ~used) != 0) continue;  // some predecessor not placed yet
    prefix.push_back(v);
    enumerate_extensions(p, prefix, used | (1u << v), preds, incpairs, vectors);
    prefix.pop_back();
  }
}

}  // namespace

std::optional<int> brute_force_dimension(const Poset& p, int max_k) {
  const int n = p.size();
  if (n > 30) throw ArityError("brute_force_dimension: poset too large");
  std::vector<std::pair<int, int>> incpairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.incomparable(i, j)) incpairs.emplace_back(i, j);
  if (max_k < 1) return std::nullopt;
  if (incpairs.empty()) return 1;  // the poset is a chain (or empty)
  if (incpairs.size() > 31) throw ArityError("brute_force_dimension: too many incomparable pairs");

  std::vector<std::uint32_t> preds(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) preds[i] |= (1u << j);

  // Distinct orientation vectors over the incomparable pairs; k extensions
  // realize p exactly when every pair sees both orientations among them.
  std::set<std::uint32_t> vecset;
  std::vector<int> prefix;
  enumerate_extensions(p, prefix, 0, preds, incpairs, vecset);
  std::vector<std::uint32_t> vecs(vecset.begin(), vecset.end());
  const std::uint32_t full = (incpairs.size() == 31) ? 0x7fffffffu
                                                     : ((1u << incpairs.size()) - 1);

  if (max_k >= 2) {
    for (std::uint32_t v : vecs)
      if (vecset.count(full & ~v)) return 2;
  }
  if (max_k >= 3) {
    // pivot on the first pair: one chosen vector must orient it 1, one 0
    for (std::size_t a = 0; a < vecs.size(); ++a) {
      if (!(vecs[a] & 1u)) continue;
      for (std::size_t b = 0; b < vecs.size(); ++b) {
        if (vecs[b] & 1u) continue;
        const std::uint32_t need1 = full & ~(vecs[a] | vecs[b]);
        const std::uint32_t need0 = vecs[a] & vecs[b];
        for (std::size_t c = 0; c < vecs.size(); ++c) {
          if ((vecs[c] & need1) == need1 && (vecs[c] & need0) == 0) return 3;
        }
      }
    }
  }
  for (int k = 4; k <= max_k; ++k) {
    // general k: depth-first over vectors with coverage pruning
    std::vector<std::uint32_t> chosen;
    std::function<bool(std::size_t, std::uint32_t, std::uint32_t)> go =
        [&](std::size_t start, std::uint32_t ones, std::uint32_t zeros) -> bool {
      if (ones == full && zeros == full) return true;
      if (static_cast<int>(chosen.size()) == k) return false;
      for (std::size_t i = start; i < vecs.size(); ++i) {
        chosen.push_back(vecs[i]);
        if (go(i + 1, ones | vecs[i], zeros | (full & ~vecs[i]))) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (go(0, 0, 0)) return k;
  }
  return std::nullopt;
}

}  // namespace semiord
