#include "semiord/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "semiord/errors.hpp"

namespace semiord {

namespace {

// 64-bit adjacency encoding; valid for n <= 8.
std::uint64_t encode(const Poset& p, const std::vector<int>& perm) {
  std::uint64_t bits = 0;
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(perm[i], perm[j])) bits |= std::uint64_t{1} << (i * n + j);
  return bits;
}

// Canonical form: minimum encoding over permutations compatible with an
// iterated degree-signature partition.  The partition prunes the search
// far below n! for everything except highly symmetric posets.
std::uint64_t canonical(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint64_t> sig(n);
  for (int v = 0; v < n; ++v) {
    const auto d = p.down_set(v).size();
    const auto u = p.up_set(v).size();
    sig[v] = (static_cast<std::uint64_t>(d) << 8) | u;
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::uint64_t> below, above;
      for (int w = 0; w < n; ++w) {
        if (p.less(w, v)) below.push_back(sig[w]);
        if (p.less(v, w)) above.push_back(sig[w]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      std::uint64_t h = sig[v];
      for (auto x : below) h = h * 1000003u + x + 1;
      for (auto x : above) h = h * 998244353u + x + 2;
      next[v] = h;
    }
    sig = std::move(next);
  }

  // group vertices by signature; candidate permutations respect group order
  std::map<std::uint64_t, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[sig[v]].push_back(v);

  std::vector<std::vector<int>> blocks;
  for (auto& [key, vs] : groups) blocks.push_back(vs);

  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm;
  perm.reserve(n);
  // iterate over products of block permutations
  std::vector<std::vector<int>> arr(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) arr[b] = blocks[b];
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> full;
      for (const auto& a : arr) full.insert(full.end(), a.begin(), a.end());
      best = std::min(best, encode(p, full));
      return;
    }
    std::sort(arr[b].begin(), arr[b].end());
    do {
      rec(b + 1);
    } while (std::next_permutation(arr[b].begin(), arr[b].end()));
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Poset> poset_classes(int n) {
  if (n < 0 || n > 7) throw ArityError("poset_classes: supported for 0 <= n <= 7");
  if (n == 0) return {};
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int m = static_cast<int>(pairs.size());

  std::vector<Poset> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    BitRel r(n);
    for (int t = 0; t < m; ++t)
      if (mask & (1u << t)) r.set(pairs[t].first, pairs[t].second);
    if (!r.is_transitive()) continue;
    // upper-triangular, so irreflexive and acyclic by construction
    Poset p(std::move(r));
    const std::uint64_t c = canonical(p);
    if (seen.insert(c).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Poset> poset_corpus(int max_n) {
  std::vector<Poset> out;
  for (int n = 1; n <= max_n; ++n) {
    auto classes = poset_classes(n);
    out.insert(out.end(), classes.begin(), classes.end());
  }
  return out;
}

}  // namespace semiord
