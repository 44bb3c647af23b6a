#include "semiord/poset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "semiord/errors.hpp"

namespace semiord {

Poset::Poset(BitRel lt, std::vector<std::string> labels)
    : lt_(std::move(lt)), labels_(std::move(labels)) {
  if (!lt_.is_irreflexive()) throw CycleError("strict order must be irreflexive");
  if (!lt_.is_transitive()) throw CycleError("strict order must be transitive");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != lt_.size())
    throw ArityError("label count must match element count");
}

void Poset::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != size())
    throw ArityError("label count must match element count");
  labels_ = std::move(labels);
}

int Poset::pair_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (less(i, j)) ++c;
  return c;
}

std::vector<int> Poset::down_set(int i) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (less(z, i)) out.push_back(z);
  return out;
}

std::vector<int> Poset::up_set(int i) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (less(i, z)) out.push_back(z);
  return out;
}

Poset Poset::induced(const std::vector<int>& elements) const {
  const int m = static_cast<int>(elements.size());
  BitRel r(m);
  for (int a = 0; a < m; ++a) {
    if (elements[a] < 0 || elements[a] >= size()) throw IndexError("induced: index out of range");
    for (int b = 0; b < m; ++b)
      if (less(elements[a], elements[b])) r.set(a, b);
  }
  return Poset(std::move(r));
}

Poset build_poset(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw IndexError("negative element count");
  BitRel r(n);
  for (const auto& [i, j] : edges) {
    if (i < 0 || i >= n || j < 0 || j >= n) throw IndexError("edge index out of range");
    r.set(i, j);
  }
  r.transitive_close();
  if (!r.is_irreflexive()) throw CycleError("edges close into a cycle");
  return Poset(std::move(r));
}

Poset chain(int n) {
  BitRel r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) r.set(i, j);
  return Poset(std::move(r));
}

Poset antichain(int n) { return Poset(BitRel(n)); }

Poset chain_sum(int p, int q) {
  BitRel r(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) r.set(i, j);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) r.set(p + i, p + j);
  return Poset(std::move(r));
}

Poset two_plus_two() { return chain_sum(2, 2); }
Poset three_plus_one() { return chain_sum(3, 1); }
Poset one_plus_chain(int n) { return chain_sum(1, n); }

Poset crown_s3() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) edges.emplace_back(i, 3 + j);
  return build_poset(6, edges);
}

namespace {

// Embedding search as a CSP: per-pattern-vertex candidate bitmasks over host
// vertices, most-constrained vertex first, forward checking after each
// assignment.  Deterministic: ties break toward the least index, candidates
// are scanned ascending.
struct EmbedSearch {
  const Poset& pat;
  int hn = 0, words = 0;
  std::vector<std::uint64_t> lt_row, gt_row, inc_row;  // host rows, words each
  std::vector<int> assign;

  std::uint64_t* row(std::vector<std::uint64_t>& v, int i) { return v.data() + i * words; }

  bool run(std::vector<std::uint64_t>& dom) {
    int best = -1, best_count = -1;
    for (int v = 0; v < pat.size(); ++v) {
      if (assign[v] >= 0) continue;
      int c = 0;
      for (int w = 0; w < words; ++w) c += std::popcount(dom[v * words + w]);
      if (c == 0) return false;
      if (best < 0 || c < best_count) { best = v; best_count = c; }
    }
    if (best < 0) return true;
    for (int w = 0; w < words; ++w) {
      std::uint64_t bits = dom[best * words + w];
      while (bits) {
        const int h = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        assign[best] = h;
        std::vector<std::uint64_t> next = dom;
        bool dead = false;
        for (int u = 0; u < pat.size() && !dead; ++u) {
          if (assign[u] >= 0 || u == best) continue;
          std::uint64_t* du = next.data() + u * words;
          const std::uint64_t* filter = pat.less(best, u)   ? &lt_row[h * words]
                                        : pat.less(u, best) ? &gt_row[h * words]
                                                            : &inc_row[h * words];
          bool any = false;
          for (int ww = 0; ww < words; ++ww) {
            du[ww] &= filter[ww];
            if (ww == h / 64) du[ww] &= ~(std::uint64_t{1} << (h % 64));
            any = any || du[ww];
          }
          dead = !any;
        }
        if (!dead && run(next)) return true;
        assign[best] = -1;
      }
    }
    return false;
  }
};

}  // namespace

PatternMatch embeds_pattern(const Poset& host, const Poset& pattern) {
  const int m = pattern.size();
  if (m == 0) return {true, {}};
  if (m > host.size()) return {false, {}};
  const int hn = host.size();

  EmbedSearch s{pattern, 0, 0, {}, {}, {}, {}};
  s.hn = hn;
  s.words = (hn + 63) / 64;
  s.lt_row.assign(static_cast<std::size_t>(hn) * s.words, 0);
  s.gt_row.assign(static_cast<std::size_t>(hn) * s.words, 0);
  s.inc_row.assign(static_cast<std::size_t>(hn) * s.words, 0);
  std::vector<int> hup(hn, 0), hdown(hn, 0);
  for (int i = 0; i < hn; ++i) {
    for (int j = 0; j < hn; ++j) {
      if (host.less(i, j)) {
        s.lt_row[i * s.words + j / 64] |= std::uint64_t{1} << (j % 64);
        ++hup[i];
        ++hdown[j];
      } else if (!host.less(j, i) && i != j) {
        s.inc_row[i * s.words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
  for (int i = 0; i < hn; ++i)
    for (int j = 0; j < hn; ++j)
      if (host.less(j, i)) s.gt_row[i * s.words + j / 64] |= std::uint64_t{1} << (j % 64);

  // initial domains: host degree must dominate the pattern degree
  std::vector<std::uint64_t> dom(static_cast<std::size_t>(m) * s.words, 0);
  for (int v = 0; v < m; ++v) {
    int pup = 0, pdown = 0;
    for (int u = 0; u < m; ++u) {
      if (pattern.less(v, u)) ++pup;
      if (pattern.less(u, v)) ++pdown;
    }
    for (int h = 0; h < hn; ++h)
      if (hup[h] >= pup && hdown[h] >= pdown)
        dom[v * s.words + h / 64] |= std::uint64_t{1} << (h % 64);
  }
  s.assign.assign(m, -1);
  if (!s.run(dom)) return {false, {}};
  return {true, s.assign};
}

Poset lex_sum(const Poset& index, const std::vector<Poset>& components) {
  if (static_cast<int>(components.size()) != index.size())
    throw ArityError("lex_sum: one component per index element");
  std::vector<int> base(components.size() + 1, 0);
  for (std::size_t i = 0; i < components.size(); ++i)
    base[i + 1] = base[i] + components[i].size();
  BitRel r(base.back());
  for (int i = 0; i < index.size(); ++i) {
    for (int a = 0; a < components[i].size(); ++a)
      for (int b = 0; b < components[i].size(); ++b)
        if (components[i].less(a, b)) r.set(base[i] + a, base[i] + b);
    for (int j = 0; j < index.size(); ++j) {
      if (!index.less(i, j)) continue;
      for (int a = 0; a < components[i].size(); ++a)
        for (int b = 0; b < components[j].size(); ++b)
          r.set(base[i] + a, base[j] + b);
    }
  }
  return Poset(std::move(r));
}

IncComponents incomparability_components(const Poset& p) {
  const int n = p.size();
  std::vector<int> comp(n, -1);
  int parts = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = parts;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (comp[u] < 0 && p.incomparable(v, u)) {
          comp[u] = parts;
          stack.push_back(u);
        }
      }
    }
    ++parts;
  }
  std::vector<std::vector<int>> groups(parts);
  for (int v = 0; v < n; ++v) groups[comp[v]].push_back(v);

  // The induced order on parts is total; sort parts by it and verify.
  std::vector<int> idx(parts);
  std::iota(idx.begin(), idx.end(), 0);
  auto part_less = [&](int a, int b) { return p.less(groups[a][0], groups[b][0]); };
  std::sort(idx.begin(), idx.end(), part_less);
  IncComponents out;
  for (int k = 0; k < parts; ++k) out.parts.push_back(std::move(groups[idx[k]]));
  for (int a = 0; a < parts; ++a)
    for (int b = a + 1; b < parts; ++b)
      for (int x : out.parts[a])
        for (int y : out.parts[b])
          if (!p.less(x, y))
            throw CriteriaDisagreement("incomparability components are not totally ordered");
  return out;
}

SubsetProperties subset_properties(const Poset& p, const std::vector<int>& subset) {
  const int n = p.size();
  std::vector<char> in(n, 0);
  for (int v : subset) {
    if (v < 0 || v >= n) throw IndexError("subset element out of range");
    in[v] = 1;
  }
  SubsetProperties out;
  out.autonomous = true;
  out.convex = true;
  out.antichain = true;
  out.chain = true;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      const int y = subset[a], y2 = subset[b];
      if (y == y2) continue;
      if (p.comparable(y, y2)) out.antichain = false;
      else out.chain = false;
      for (int x = 0; x < n; ++x) {
        if (in[x]) continue;
        if (p.less(x, y) != p.less(x, y2)) out.autonomous = false;
        if (p.less(y, x) != p.less(y2, x)) out.autonomous = false;
      }
      for (int z = 0; z < n; ++z)
        if (!in[z] && p.less(y, z) && p.less(z, y2)) out.convex = false;
    }
  }
  return out;
}

QuasiOrder::QuasiOrder(BitRel le) : le_(std::move(le)) {
  if (!le_.is_reflexive()) throw ArityError("quasi-order must be reflexive");
  if (!le_.is_transitive()) throw ArityError("quasi-order must be transitive");
}

bool QuasiOrder::is_total() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!le(i, j) && !le(j, i)) return false;
  return true;
}

bool QuasiOrder::is_antisymmetric() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (le(i, j) && le(j, i)) return false;
  return true;
}

QuasiOrder intersect(const QuasiOrder& a, const QuasiOrder& b) {
  if (a.size() != b.size()) throw ArityError("intersect: size mismatch");
  BitRel r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j)
      if (a.le(i, j) && b.le(i, j)) r.set(i, j);
  return QuasiOrder(std::move(r));
}

std::pair<Poset, std::vector<int>> quotient_by_equiv(const QuasiOrder& q) {
  const int n = q.size();
  std::vector<int> cls(n, -1);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = k;
    for (int j = i + 1; j < n; ++j)
      if (cls[j] < 0 && q.equiv(i, j)) cls[j] = k;
    ++k;
  }
  BitRel r(k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cls[i] != cls[j] && q.le(i, j)) r.set(cls[i], cls[j]);
  return {Poset(std::move(r)), std::move(cls)};
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  if (a.pair_count() != b.pair_count()) return false;
  PatternMatch m = embeds_pattern(a, b);
  return m.found;  // equal sizes: an embedding is an isomorphism
}

}  // namespace semiord
