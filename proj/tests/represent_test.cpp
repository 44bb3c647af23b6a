#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "semiord/classify.hpp"
#include "semiord/corpus.hpp"
#include "semiord/errors.hpp"
#include "semiord/represent.hpp"

using namespace semiord;

TEST_SUITE_BEGIN("represent");

TEST_CASE("interval representation") {
  SUBCASE("3+1 gets the canonical rank intervals") {
    // 0<1<2 chain, 3 isolated
    const IntervalRepresentation rep = interval_representation(three_plus_one());
    CHECK(rep.intervals[0] == std::make_pair(Rational(0), Rational(0)));
    CHECK(rep.intervals[1] == std::make_pair(Rational(1), Rational(1)));
    CHECK(rep.intervals[2] == std::make_pair(Rational(2), Rational(2)));
    CHECK(rep.intervals[3] == std::make_pair(Rational(0), Rational(2)));
  }
  SUBCASE("chain of two") {
    const IntervalRepresentation rep = interval_representation(chain(2));
    CHECK(rep.intervals[0] == std::make_pair(Rational(0), Rational(0)));
    CHECK(rep.intervals[1] == std::make_pair(Rational(1), Rational(1)));
  }
  SUBCASE("2+2 is rejected") {
    CHECK_THROWS_AS(interval_representation(two_plus_two()), NotIntervalOrder);
  }
  SUBCASE("round trip over the n <= 5 corpus") {
    for (const Poset& p : poset_corpus(5)) {
      if (!classify(p).is_interval) continue;
      CHECK(poset_from_intervals(interval_representation(p)).relation() == p.relation());
    }
  }
}

TEST_CASE("unit representation") {
  SUBCASE("1+2 satisfies the unit invariant") {
    const Poset p = one_plus_chain(2);
    const UnitRepresentation rep = unit_representation(p);
    CHECK(poset_from_unit(rep).relation() == p.relation());
  }
  SUBCASE("antichain offsets stay within an open unit window") {
    const UnitRepresentation rep = unit_representation(antichain(3));
    const auto [lo, hi] = std::minmax_element(rep.offset.begin(), rep.offset.end());
    CHECK(*hi - *lo < 1);
  }
  SUBCASE("chain offsets climb by at least one") {
    const UnitRepresentation rep = unit_representation(chain(3));
    CHECK(rep.offset[1] - rep.offset[0] >= 1);
    CHECK(rep.offset[2] - rep.offset[1] >= 1);
  }
  SUBCASE("non-semiorders are rejected") {
    CHECK_THROWS_AS(unit_representation(two_plus_two()), NotSemiorder);
    CHECK_THROWS_AS(unit_representation(three_plus_one()), NotSemiorder);
  }
  SUBCASE("round trip over the n <= 5 corpus") {
    for (const Poset& p : poset_corpus(5)) {
      if (!classify(p).is_semiorder) continue;
      CHECK(poset_from_unit(unit_representation(p)).relation() == p.relation());
    }
  }
}

TEST_CASE("three-order realizer") {
  SUBCASE("integer window, alpha = 2") {
    std::vector<Rational> keys;
    for (long long v = -4; v <= 4; ++v) keys.emplace_back(v);
    const Realizer r = realizer_dim3_threshold(keys, Rational(2));
    REQUIRE(r.orders.size() == 3);
    CHECK(realizer_matches(r, threshold_poset(keys, Rational(2))));
  }
  SUBCASE("singleton") {
    const Realizer r = realizer_dim3_threshold({Rational(0)}, Rational(7));
    for (const auto& ord : r.orders) CHECK(ord == std::vector<int>{0});
  }
  SUBCASE("window 0..3 with alpha = 1 is the natural order") {
    std::vector<Rational> keys{0, 1, 2, 3};
    const Realizer r = realizer_dim3_threshold(keys, Rational(1));
    const Poset p = threshold_poset(keys, Rational(1));
    CHECK(p.less(0, 1));  // 1 - 0 attains the threshold
    CHECK(realizer_matches(r, p));
  }
  SUBCASE("rational keys") {
    std::vector<Rational> keys{Rational(-3, 2), Rational(0), Rational(1, 2),
                               Rational(5, 4), Rational(9, 4), Rational(3)};
    const Realizer r = realizer_dim3_threshold(keys, Rational(3, 4));
    CHECK(realizer_matches(r, threshold_poset(keys, Rational(3, 4))));
  }
  SUBCASE("random key sets, property-style") {
    std::mt19937_64 rng(123);
    std::uniform_int_distribution<int> num(-24, 24), den_pow(0, 3), sz(1, 12), apow(0, 2);
    for (int t = 0; t < 200; ++t) {
      std::set<Rational> keyset;
      const int m = sz(rng);
      while (static_cast<int>(keyset.size()) < m)
        keyset.insert(Rational(num(rng), 1 << den_pow(rng)));
      std::vector<Rational> keys(keyset.begin(), keyset.end());
      const Rational alpha(1 + (num(rng) & 3), 1 << apow(rng));
      const Realizer r = realizer_dim3_threshold(keys, alpha);
      CHECK(realizer_matches(r, threshold_poset(keys, alpha)));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(realizer_dim3_threshold({Rational(1), Rational(1)}, Rational(1)),
                    InvalidKey);
    CHECK_THROWS_AS(realizer_dim3_threshold({Rational(1)}, Rational(0)), NonPositiveAlpha);
  }
}

TEST_CASE("brute-force dimension") {
  CHECK(brute_force_dimension(chain(5), 3) == 1);
  CHECK(brute_force_dimension(two_plus_two(), 3) == 2);
  CHECK(brute_force_dimension(antichain(5), 3) == 2);
  CHECK(brute_force_dimension(crown_s3(), 3) == 3);
  CHECK(brute_force_dimension(crown_s3(), 2) == std::nullopt);  // Exceeded
  SUBCASE("the 8-element crown needs four extensions") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) edges.emplace_back(i, 4 + j);
    const Poset s4 = build_poset(8, edges);
    CHECK(brute_force_dimension(s4, 3) == std::nullopt);
    CHECK(brute_force_dimension(s4, 4) == 4);
  }
  SUBCASE("matches flags on the small corpus") {
    for (const Poset& p : poset_corpus(4)) {
      const auto d = brute_force_dimension(p, 3);
      REQUIRE(d.has_value());
      if (classify(p).is_chain) CHECK(*d == 1);
    }
  }
}

TEST_SUITE_END();
