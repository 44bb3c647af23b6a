#include <doctest.h>

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "semiord/classify.hpp"
#include "semiord/errors.hpp"
#include "semiord/group.hpp"

using namespace semiord;

namespace {

GroupPtr figure2() {
  return std::make_shared<ZnGroup>(WeightOrder(2, {{0, 1}, {1, 0}}),
                                   FinalSegment{{0, 1}, true});
}

GroupPtr z_theta(long long t, bool closed = true) {
  return std::make_shared<ZnGroup>(WeightOrder::lex(1), FinalSegment{{t}, closed});
}

}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("weight-order comparison") {
  const WeightOrder w(2, {{0, 1}, {1, 0}});
  SUBCASE("first row decides: (3,-1) below (0,0)") {
    CHECK(w.compare({3, -1}, {0, 0}) == Cmp::Less);
  }
  SUBCASE("the positive cone is C_B") {
    const Vec zero{0, 0};
    for (long long n = -4; n <= 4; ++n)
      for (long long m = -4; m <= 4; ++m) {
        const bool in_cb = (n == 0 && m == 0) || m > 0 || (m == 0 && n > 0);
        CHECK((w.compare(zero, {n, m}) != Cmp::Greater) == in_cb);
      }
  }
  SUBCASE("reflexive equality") { CHECK(w.compare({2, 5}, {2, 5}) == Cmp::Equal); }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(w.compare({1}, {0, 0}), DimensionError);
  }
  SUBCASE("singular matrices are rejected") {
    CHECK_THROWS_AS(WeightOrder(2, {{1, 2}, {2, 4}}), DimensionError);
  }
  SUBCASE("translation invariance, sampled") {
    CHECK(compatibility_sample(*figure2(), 50, 10000, 7));
  }
}

TEST_CASE("group order on carriers") {
  SUBCASE("Z with closed threshold 2") {
    const GroupPtr g = z_theta(2);
    CHECK(g->le({0}, {2}));
    CHECK_FALSE(g->le({0}, {1}));
    CHECK(g->le({0}, {0}));
  }
  SUBCASE("odot rule from the examples") {
    const GroupPtr inner = z_theta(1);
    const OdotGroup g(WeightOrder::lex(1), FinalSegment{{1}, true}, inner, {1});
    for (long long a = -3; a <= 3; ++a)
      for (long long b = -3; b <= 3; ++b) {
        const bool expect = b >= 2 || (b == 1 && a >= 1);
        CHECK(g.lt({0, 0}, {a, b}) == expect);
      }
  }
  SUBCASE("figure-2 cone points") {
    const GroupPtr g = figure2();
    CHECK(g->lt({0, 0}, {-5, 2}));
    CHECK_FALSE(g->lt({0, 0}, {-5, 1}));
  }
  SUBCASE("a closed segment containing 0 is rejected") {
    CHECK_THROWS_AS(ZnGroup(WeightOrder::lex(1), FinalSegment{{0}, true}), InvalidSegment);
    CHECK_THROWS_AS(ZnGroup(WeightOrder::lex(1), FinalSegment{{-1}, true}), InvalidSegment);
  }
}

TEST_CASE("cone validation in a window") {
  SUBCASE("the figure-2 cone passes") {
    const GroupPtr g = figure2();
    const Window w = make_window(*g, {{-4, 4}, {-4, 4}});
    const auto cone = [&](const Vec& v) { return v == Vec{0, 0} || g->lt({0, 0}, v); };
    const ConeReport rep = validate_cone(cone, w);
    CHECK(rep.ok());
    CHECK(rep.normality_trivial);
  }
  SUBCASE("missing sums are caught") {
    const Window w = Window::cube(2, -3, 3);
    const auto cone = [](const Vec& v) { return v == Vec{0, 0} || v == Vec{1, 0}; };
    const ConeReport rep = validate_cone(cone, w);
    CHECK_FALSE(rep.closed_under_addition);
    REQUIRE(rep.addition_failure.has_value());
    CHECK(rep.addition_failure->first == Vec{1, 0});
  }
  SUBCASE("x and -x both positive is caught") {
    const Window w = Window::cube(1, -3, 3);
    const auto cone = [](const Vec& v) { return v[0] == 0 || v[0] == 2 || v[0] == -2; };
    CHECK_FALSE(validate_cone(cone, w).antisymmetric);
  }
}

TEST_CASE("window posets") {
  SUBCASE("Z theta=2 on [-2,2]") {
    const GroupPtr g = z_theta(2);
    const WindowPoset wp = window_poset(*g, make_window(*g, {{-2, 2}}));
    REQUIRE(wp.elements.size() == 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        CHECK(wp.poset.less(i, j) == (wp.elements[j][0] - wp.elements[i][0] >= 2));
  }
  SUBCASE("Z theta=1 on [0,3] is a chain") {
    const GroupPtr g = z_theta(1);
    const WindowPoset wp = window_poset(*g, make_window(*g, {{0, 3}}));
    CHECK(classify(wp.poset).is_chain);
  }
  SUBCASE("figure-2 on [-3,3]^2 is a 49-element semiorder") {
    const GroupPtr g = figure2();
    const WindowPoset wp = window_poset(*g, make_window(*g, {{-3, 3}, {-3, 3}}));
    CHECK(wp.elements.size() == 49);
    const Classification c = classify(wp.poset);
    CHECK(c.is_semiorder);
    CHECK(c.is_interval == c.is_semiorder);
  }
  SUBCASE("window caps and zero requirement") {
    const GroupPtr g = z_theta(2);
    CHECK_THROWS_AS(window_poset(*g, make_window(*g, {{-500, 500}}), 100), WindowTooLarge);
    CHECK_THROWS_AS(make_window(*g, {{2, 5}}).enumerate(), WindowTooLarge);
  }
}

TEST_CASE("inc(0) windows") {
  SUBCASE("Z theta=2") {
    const GroupPtr g = z_theta(2);
    const auto inc = inc0(*g, make_window(*g, {{-5, 5}}));
    CHECK(std::set<Vec>(inc.begin(), inc.end()) == std::set<Vec>{{-1}, {1}});
  }
  SUBCASE("figure-2 formula") {
    const GroupPtr g = figure2();
    const auto inc = inc0(*g, make_window(*g, {{-3, 3}, {-3, 3}}));
    std::set<Vec> expect;
    for (long long n = -3; n <= 3; ++n) {
      if (n != 0) expect.insert({n, 0});
      if (n < 0) expect.insert({n, 1});
      if (n > 0) expect.insert({n, -1});
    }
    CHECK(std::set<Vec>(inc.begin(), inc.end()) == expect);
  }
  SUBCASE("a total order has empty inc(0)") {
    const GroupPtr g = z_theta(1);
    CHECK(inc0(*g, make_window(*g, {{-5, 5}})).empty());
  }
}

TEST_CASE("exact K, A, I with window cross-checks") {
  SUBCASE("figure-2") {
    const GroupPtr g = figure2();
    const SubgroupReport rep = subgroups_KAI(*g, make_window(*g, {{-5, 5}, {-5, 5}}));
    CHECK(rep.K.j == 0);
    CHECK(rep.K.text == "{0}");
    CHECK(rep.A.j == 1);
    CHECK(rep.A.text == "span{(1,0)}");
    CHECK(rep.I.j == 2);
    CHECK(rep.I.text == "Z^2");
    CHECK(rep.window_cross_check());
  }
  SUBCASE("Z theta=2") {
    const GroupPtr g = z_theta(2);
    const SubgroupReport rep = subgroups_KAI(*g, make_window(*g, {{-6, 6}}));
    CHECK(rep.K.j == 0);
    CHECK(rep.A.j == 0);
    CHECK(rep.I.j == 1);
    CHECK(rep.window_cross_check());
  }
  SUBCASE("theta along the small subgroup of Z^2") {
    const GroupPtr g = std::make_shared<ZnGroup>(WeightOrder(2, {{0, 1}, {1, 0}}),
                                                 FinalSegment{{3, 0}, true});
    const SubgroupReport rep = subgroups_KAI(*g, make_window(*g, {{-6, 6}, {-2, 2}}));
    CHECK(rep.K.j == 0);
    CHECK(rep.A.j == 0);
    CHECK(rep.I.j == 1);  // Z x {0}
    CHECK(rep.I.text == "span{(1,0)}");
    CHECK(rep.window_cross_check());
  }
  SUBCASE("open threshold") {
    const GroupPtr g = std::make_shared<ZnGroup>(WeightOrder::lex(2),
                                                 FinalSegment{{1, 3}, false});
    const SubgroupReport rep = subgroups_KAI(*g, make_window(*g, {{-6, 6}, {-6, 6}}));
    CHECK(rep.K.j == 0);
    CHECK(rep.A.j == 1);
    CHECK(rep.A.text == "span{(0,1)}");
    CHECK(rep.I.j == 2);
    CHECK(rep.window_cross_check());
  }
  SUBCASE("random weight specs keep the cross-checks green") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> entry(-4, 4), tentry(-3, 3);
    std::uniform_int_distribution<int> flavor(0, 1);
    int done = 0;
    while (done < 60) {
      try {
        WeightOrder order(2, {{entry(rng), entry(rng)}, {entry(rng), entry(rng)}});
        Vec theta{tentry(rng), tentry(rng)};
        const Vec zero{0, 0};
        if (order.compare(theta, zero) == Cmp::Equal) continue;
        if (order.compare(theta, zero) == Cmp::Less) theta = vec_neg(theta);
        const ZnGroup g(order, FinalSegment{theta, flavor(rng) == 0});
        const SubgroupReport rep = subgroups_KAI(g, make_window(g, {{-6, 6}, {-6, 6}}));
        CHECK(rep.K.j == 0);
        CHECK(rep.K.j <= rep.A.j);
        CHECK(rep.A.j <= rep.I.j);
        CHECK(rep.window_cross_check());
        ++done;
      } catch (const DimensionError&) {
        continue;  // singular draw
      }
    }
  }
  SUBCASE("products are not claimed exactly") {
    const GroupPtr g = std::make_shared<LexProdGroup>(2, z_theta(1));
    CHECK_THROWS_AS(subgroups_KAI(*g, make_window(*g, {{-4, 4}})), UnsupportedCarrier);
  }
  SUBCASE("lexprod window evidence: the cyclic factor is isolated in inc(0)") {
    const GroupPtr g = std::make_shared<LexProdGroup>(2, z_theta(1));
    const Window w = make_window(*g, {{-4, 4}});
    const auto inc = inc0(*g, w);
    REQUIRE(inc.size() == 1);
    CHECK(inc[0] == Vec{1, 0});
    CHECK_FALSE(verify_threshold(*g, w).k_trivial);
  }
}

TEST_CASE("threshold verification") {
  SUBCASE("Z theta=3 confirmed, pred is the natural order") {
    const GroupPtr g = z_theta(3);
    const ThresholdReport rep = verify_threshold(*g, make_window(*g, {{-6, 6}}));
    CHECK(rep.confirmed());
    CHECK(rep.pred_matches_weight_order);
  }
  SUBCASE("lexprod with a cyclic factor is not a threshold group") {
    const GroupPtr g = std::make_shared<LexProdGroup>(2, z_theta(1));
    CHECK_FALSE(verify_threshold(*g, make_window(*g, {{-4, 4}})).confirmed());
  }
  SUBCASE("odot confirmed in a window") {
    const GroupPtr g = std::make_shared<OdotGroup>(WeightOrder::lex(1), FinalSegment{{1}, true},
                                                   z_theta(1), Vec{1});
    CHECK(verify_threshold(*g, make_window(*g, {{-3, 3}, {-3, 3}})).confirmed());
  }
  SUBCASE("example 5: ordered factor lexprod confirmed") {
    const GroupPtr g = std::make_shared<LexProdGroup>(z_theta(2), z_theta(1));
    CHECK(verify_threshold(*g, make_window(*g, {{-4, 4}, {-4, 4}})).confirmed());
  }
  SUBCASE("the grid cone is an odot order in disguise") {
    // figure-2 on Z^2 coincides pointwise with Z odot_{F={k>=0}, alpha=1} Z:
    // the odot segment here contains 0.
    const GroupPtr fig = figure2();
    const OdotGroup od(WeightOrder::lex(1), FinalSegment{{0}, true}, z_theta(1), Vec{1});
    for (long long a = -5; a <= 5; ++a)
      for (long long b = -5; b <= 5; ++b)
        for (long long a2 = -5; a2 <= 5; ++a2)
          for (long long b2 = -5; b2 <= 5; ++b2)
            REQUIRE(fig->lt({a, b}, {a2, b2}) == od.lt({a, b}, {a2, b2}));
  }
  SUBCASE("composite carrier: K x (A odot B) summed over a chain") {
    // K = Z/2 unordered, A' = Z odot_{F={k>=1},1} Z, C = Z; the full product
    // is a semiordered group whose isolated inc(0) part is the K factor, and
    // A' x C on its own is a threshold group.
    const GroupPtr aprime = std::make_shared<OdotGroup>(
        WeightOrder::lex(1), FinalSegment{{1}, true}, z_theta(1), Vec{1});
    const GroupPtr k_aprime = std::make_shared<LexProdGroup>(2, aprime);
    const GroupPtr g = std::make_shared<LexProdGroup>(k_aprime, z_theta(1));
    const Window w = make_window(*g, {{-2, 2}, {-2, 2}, {-2, 2}});
    const WindowPoset wp = window_poset(*g, w);
    const Classification c = classify(wp.poset);
    CHECK(c.is_semiorder);
    CHECK(c.is_interval == c.is_semiorder);
    CHECK_FALSE(verify_threshold(*g, w).k_trivial);  // the Z/2 part is isolated

    const GroupPtr threshold_part = std::make_shared<LexProdGroup>(aprime, z_theta(1));
    const Window tw = make_window(*threshold_part, {{-3, 3}, {-3, 3}, {-3, 3}});
    CHECK(verify_threshold(*threshold_part, tw).confirmed());
  }
}

TEST_CASE("pattern transfer") {
  SUBCASE("Z theta=2: co-occurrence at n=3") {
    const GroupPtr g = z_theta(2);
    const TransferReport rep = pattern_transfer_check(*g, make_window(*g, {{-20, 20}}), 3);
    CHECK_FALSE(rep.violation);
    for (const TransferRow& r : rep.rows) CHECK(r.embeds == rep.one_plus_n_embeds);
  }
  SUBCASE("total order: nothing embeds at n=2") {
    const GroupPtr g = z_theta(1);
    const TransferReport rep = pattern_transfer_check(*g, make_window(*g, {{-10, 10}}), 2);
    CHECK_FALSE(rep.violation);
    CHECK_FALSE(rep.one_plus_n_embeds);
    for (const TransferRow& r : rep.rows) CHECK_FALSE(r.embeds);
  }
  SUBCASE("Z theta=2: 1+2 present at n=2") {
    const GroupPtr g = z_theta(2);
    const TransferReport rep = pattern_transfer_check(*g, make_window(*g, {{-10, 10}}), 2);
    CHECK_FALSE(rep.violation);
    CHECK(rep.one_plus_n_embeds);
  }
  SUBCASE("figure-2: co-occurrence at n=3") {
    const GroupPtr g = figure2();
    const TransferReport rep = pattern_transfer_check(*g, make_window(*g, {{-6, 6}, {-6, 6}}), 3);
    CHECK_FALSE(rep.violation);
  }
  SUBCASE("a non-group order trips the violation flag") {
    // Not a compatible order: a fixed 3-chain 1<2<3 inside Z, everything
    // else incomparable.  1+3 embeds, 2+2 cannot, and growing the window
    // does not help, so the transfer check must report a violation.
    struct Rigged final : GroupOrder {
      int dim() const override { return 1; }
      bool lt(const Vec& x, const Vec& y) const override {
        return x[0] >= 1 && x[0] <= 3 && y[0] >= 1 && y[0] <= 3 && x[0] < y[0];
      }
      Vec margin() const override { return {1}; }
      std::string describe() const override { return "rigged"; }
    };
    const Rigged g;
    const TransferReport rep = pattern_transfer_check(g, make_window(g, {{-4, 4}}), 3);
    CHECK(rep.one_plus_n_embeds);
    CHECK(rep.grew_window);
    CHECK(rep.violation);
    CHECK(rep.detail.find("window grown once") != std::string::npos);
  }
  SUBCASE("window growth covers the witness differences") {
    const Window w = Window{{{-3, 5}}};
    const Window grown = w.grown_for_transfer();
    CHECK(grown.bounds[0].first == -16);
    CHECK(grown.bounds[0].second == 16);
    const GroupPtr g = std::make_shared<LexProdGroup>(3, z_theta(1));
    const Window lw = make_window(*g, {{-2, 2}});
    // cyclic coordinate must stay fixed when growing
    const TransferReport rep = pattern_transfer_check(*g, lw, 2);
    CHECK_FALSE(rep.violation);
  }
}

TEST_CASE("make_window validates the free-range arity") {
  const GroupPtr g = std::make_shared<LexProdGroup>(2, z_theta(1));
  CHECK_THROWS_AS(make_window(*g, {}), DimensionError);
  CHECK_THROWS_AS(make_window(*g, {{-2, 2}, {-2, 2}}), DimensionError);
  const Window w = make_window(*g, {{-2, 2}});
  CHECK(w.bounds[0] == std::make_pair(0LL, 1LL));
}

TEST_CASE("interior margins") {
  const GroupPtr g = figure2();
  CHECK(g->margin() == Vec{0, 1});
  const Window w = make_window(*g, {{-5, 5}, {-5, 5}});
  const Window inner = w.interior(g->margin());
  CHECK(inner.bounds[0] == std::make_pair(-5LL, 5LL));
  CHECK(inner.bounds[1] == std::make_pair(-4LL, 4LL));
}

TEST_SUITE_END();
