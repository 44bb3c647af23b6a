#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "semiord/corpus.hpp"
#include "semiord/errors.hpp"
#include "semiord/poset.hpp"

using namespace semiord;

TEST_SUITE_BEGIN("poset");

TEST_CASE("build_poset applies the transitive closure") {
  const Poset empty = build_poset(2, {});
  CHECK(empty.incomparable(0, 1));

  const Poset c = build_poset(3, {{0, 1}, {1, 2}});
  CHECK(c.less(0, 1));
  CHECK(c.less(1, 2));
  CHECK(c.less(0, 2));  // forced by closure

  CHECK_THROWS_AS(build_poset(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
  CHECK_THROWS_AS(build_poset(2, {{0, 5}}), IndexError);
}

TEST_CASE("pattern embedding") {
  SUBCASE("2+2 embeds into itself with the identity witness") {
    const PatternMatch m = embeds_pattern(two_plus_two(), two_plus_two());
    REQUIRE(m.found);
    CHECK(m.witness == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("3+1 hosts no 2+2") {
    CHECK_FALSE(embeds_pattern(three_plus_one(), two_plus_two()).found);
  }
  SUBCASE("1+2 hosts itself but no 3+1") {
    CHECK(embeds_pattern(one_plus_chain(2), one_plus_chain(2)).found);
    CHECK_FALSE(embeds_pattern(one_plus_chain(2), three_plus_one()).found);
  }
  SUBCASE("witnesses preserve and reflect the order") {
    const Poset host = crown_s3();
    const PatternMatch m = embeds_pattern(host, two_plus_two());
    REQUIRE(m.found);
    const Poset pat = two_plus_two();
    for (int i = 0; i < pat.size(); ++i)
      for (int j = 0; j < pat.size(); ++j)
        CHECK(pat.less(i, j) == host.less(m.witness[i], m.witness[j]));
  }
  SUBCASE("composition of witnesses is a witness") {
    // antichain-2 embeds into 1+2 embeds into 2+2
    const Poset a = two_plus_two(), b = one_plus_chain(2), c = antichain(2);
    const PatternMatch ab = embeds_pattern(a, b);
    const PatternMatch bc = embeds_pattern(b, c);
    REQUIRE(ab.found);
    REQUIRE(bc.found);
    for (int i = 0; i < c.size(); ++i)
      for (int j = 0; j < c.size(); ++j)
        CHECK(c.less(i, j) == a.less(ab.witness[bc.witness[i]], ab.witness[bc.witness[j]]));
    CHECK(embeds_pattern(a, c).found);
  }
}

namespace {

// Reference decider: try every injection outright.
bool embeds_naive(const Poset& host, const Poset& pat, std::vector<int>& map,
                  std::vector<char>& used) {
  const int k = static_cast<int>(map.size());
  if (k == pat.size()) return true;
  for (int h = 0; h < host.size(); ++h) {
    if (used[h]) continue;
    bool ok = true;
    for (int t = 0; t < k && ok; ++t)
      ok = pat.less(t, k) == host.less(map[t], h) && pat.less(k, t) == host.less(h, map[t]);
    if (!ok) continue;
    used[h] = 1;
    map.push_back(h);
    if (embeds_naive(host, pat, map, used)) return true;
    map.pop_back();
    used[h] = 0;
  }
  return false;
}

bool embeds_naive(const Poset& host, const Poset& pat) {
  std::vector<int> map;
  std::vector<char> used(host.size(), 0);
  return embeds_naive(host, pat, map, used);
}

}  // namespace

TEST_CASE("embedding search agrees with the naive decider") {
  const auto hosts = poset_corpus(5);
  const std::vector<Poset> patterns{chain(2),          antichain(2), one_plus_chain(2),
                                    two_plus_two(),    three_plus_one(),
                                    one_plus_chain(3), chain(4)};
  for (std::size_t hi = 0; hi < hosts.size(); hi += 3) {
    for (const Poset& pat : patterns)
      CHECK(embeds_pattern(hosts[hi], pat).found == embeds_naive(hosts[hi], pat));
  }
}

TEST_CASE("lexicographical sums") {
  const Poset sum22 = lex_sum(antichain(2), {chain(2), chain(2)});
  CHECK(isomorphic(sum22, two_plus_two()));

  const Poset weak = lex_sum(chain(2), {antichain(2), antichain(2)});
  CHECK(weak.less(0, 2));
  CHECK(weak.less(1, 3));
  CHECK(weak.incomparable(0, 1));
  CHECK(weak.incomparable(2, 3));

  CHECK(isomorphic(lex_sum(chain(2), {chain(1), chain(1)}), chain(2)));
  CHECK_THROWS_AS(lex_sum(chain(2), {chain(1)}), ArityError);
}

TEST_CASE("incomparability components") {
  SUBCASE("chain splits into singletons in chain order") {
    const IncComponents c = incomparability_components(chain(3));
    REQUIRE(c.parts.size() == 3);
    CHECK(c.parts[0] == std::vector<int>{0});
    CHECK(c.parts[1] == std::vector<int>{1});
    CHECK(c.parts[2] == std::vector<int>{2});
  }
  SUBCASE("2+2 is one component") {
    const IncComponents c = incomparability_components(two_plus_two());
    REQUIRE(c.parts.size() == 1);
    CHECK(c.parts[0].size() == 4);
  }
  SUBCASE("linear sum of chain-2 and antichain-2") {
    const Poset p = lex_sum(chain(2), {chain(2), antichain(2)});
    const IncComponents c = incomparability_components(p);
    REQUIRE(c.parts.size() == 3);
    CHECK(c.parts[0] == std::vector<int>{0});
    CHECK(c.parts[1] == std::vector<int>{1});
    CHECK(c.parts[2] == std::vector<int>{2, 3});
  }
  SUBCASE("reconstruction over the n <= 5 corpus") {
    for (const Poset& p : poset_corpus(5)) {
      const IncComponents comps = incomparability_components(p);
      std::vector<Poset> parts;
      for (const auto& part : comps.parts) parts.push_back(p.induced(part));
      CHECK(isomorphic(lex_sum(chain(static_cast<int>(parts.size())), parts), p));
    }
  }
}

TEST_CASE("subset properties") {
  SUBCASE("one chain of 2+2 is autonomous, convex and a chain") {
    const SubsetProperties sp = subset_properties(two_plus_two(), {0, 1});
    CHECK(sp.autonomous);
    CHECK(sp.convex);
    CHECK(sp.chain);
    CHECK_FALSE(sp.antichain);
  }
  SUBCASE("a gapped chain subset is neither convex nor autonomous") {
    const SubsetProperties sp = subset_properties(chain(3), {0, 2});
    CHECK_FALSE(sp.convex);
    CHECK_FALSE(sp.autonomous);
  }
  SUBCASE("antichain subsets are autonomous antichains") {
    const SubsetProperties sp = subset_properties(antichain(3), {0, 2});
    CHECK(sp.autonomous);
    CHECK(sp.antichain);
  }
  SUBCASE("empty set and singletons are autonomous") {
    CHECK(subset_properties(chain(3), {}).autonomous);
    CHECK(subset_properties(chain(3), {1}).autonomous);
  }
}

TEST_CASE("quotient by trace equivalence") {
  SUBCASE("two equivalent elements collapse") {
    BitRel le(3);
    for (int i = 0; i < 3; ++i) le.set(i, i);
    le.set(0, 1);
    le.set(1, 0);
    le.set(0, 2);
    le.set(1, 2);
    const auto [p, proj] = quotient_by_equiv(QuasiOrder(le));
    CHECK(p.size() == 2);
    CHECK(proj == std::vector<int>{0, 0, 1});
    CHECK(p.less(0, 1));
  }
  SUBCASE("a partial order is its own quotient") {
    BitRel le(3);
    for (int i = 0; i < 3; ++i) le.set(i, i);
    le.set(0, 2);
    const auto [p, proj] = quotient_by_equiv(QuasiOrder(le));
    CHECK(p.size() == 3);
    CHECK(p.less(0, 2));
    CHECK(proj == std::vector<int>{0, 1, 2});
  }
  SUBCASE("the complete relation collapses to a point") {
    BitRel le(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) le.set(i, j);
    const auto [p, proj] = quotient_by_equiv(QuasiOrder(le));
    CHECK(p.size() == 1);
  }
}

TEST_CASE("quotients of random quasi-orders are faithful") {
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> size(1, 7), coin(0, 4);
  for (int t = 0; t < 300; ++t) {
    const int n = size(rng);
    BitRel le(n);
    for (int i = 0; i < n; ++i) {
      le.set(i, i);
      for (int j = 0; j < n; ++j)
        if (i != j && coin(rng) == 0) le.set(i, j);
    }
    le.transitive_close();
    const QuasiOrder q{le};
    const auto [p, proj] = quotient_by_equiv(q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const bool quot = proj[i] == proj[j] || p.less(proj[i], proj[j]);
        CHECK(q.le(i, j) == quot);
      }
  }
}

TEST_CASE("isomorphism is invariant under relabeling") {
  std::mt19937_64 rng(77);
  for (const Poset& p : poset_classes(5)) {
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    BitRel r(p.size());
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.less(i, j)) r.set(perm[i], perm[j]);
    CHECK(isomorphic(Poset(std::move(r)), p));
  }
}

TEST_CASE("constructors reject broken relations") {
  BitRel refl(2);
  refl.set(0, 0);
  CHECK_THROWS_AS(Poset{refl}, CycleError);

  BitRel notrans(3);
  notrans.set(0, 1);
  notrans.set(1, 2);
  CHECK_THROWS_AS(Poset{notrans}, CycleError);

  BitRel irr(2);
  CHECK_THROWS_AS(QuasiOrder{irr}, ArityError);  // not reflexive
}

TEST_SUITE_END();
