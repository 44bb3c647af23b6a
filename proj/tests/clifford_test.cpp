#include <doctest.h>

#include <random>

#include "semiord/clifford.hpp"
#include "semiord/errors.hpp"

using namespace semiord;

namespace {

CliffordWord rand_word(std::mt19937_64& rng, int maxlen) {
  std::uniform_int_distribution<int> num(-32, 32), den_pow(0, 5), expo(0, 1), len(0, maxlen);
  CliffordWord w;
  const int L = len(rng);
  for (int i = 0; i < L; ++i)
    w.push_back({Rational(num(rng), 1LL << den_pow(rng)), expo(rng) ? 1 : -1});
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("clifford");

TEST_CASE("reduction hits the normal forms from the defining relation") {
  SUBCASE("g(1) g(0) -> g(1/2) g(1)") {
    const CliffordElement e = reduce({{Rational(1), 1}, {Rational(0), 1}});
    REQUIRE(e.terms().size() == 2);
    CHECK(e.terms()[0] == std::make_pair(Rational(1, 2), 1LL));
    CHECK(e.terms()[1] == std::make_pair(Rational(1), 1LL));
    CHECK(e.str() == "+1*g(1/2) +1*g(1)");
  }
  SUBCASE("g(1)^-1 g(0) g(1) -> g(-1)") {
    const CliffordElement e = reduce({{Rational(1), -1}, {Rational(0), 1}, {Rational(1), 1}});
    CHECK(e == CliffordElement::generator(Rational(-1)));
  }
  SUBCASE("free cancellation") {
    CHECK(reduce({{Rational(0), 1}, {Rational(0), -1}}).is_identity());
  }
  SUBCASE("checked reduction agrees and validates every swap") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 500; ++t) {
      const CliffordWord w = rand_word(rng, 10);
      CHECK(reduce_checked(w) == reduce(w));
    }
  }
  SUBCASE("confluence of the two strategies") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 2000; ++t) {
      const CliffordWord w = rand_word(rng, 12);
      CHECK(reduce(w) == reduce_rtl(w));
    }
  }
}

TEST_CASE("group operations") {
  const CliffordElement g0 = CliffordElement::generator(Rational(0));
  const CliffordElement g1 = CliffordElement::generator(Rational(1));
  SUBCASE("add follows the relation") {
    const CliffordElement s = cliff_add(g1, g0);
    CHECK(s.str() == "+1*g(1/2) +1*g(1)");
  }
  SUBCASE("conjugation of g(0) by g(1) is g(-1)") {
    CHECK(cliff_conjugate(g0, g1) == CliffordElement::generator(Rational(-1)));
  }
  SUBCASE("axioms, sampled") {
    std::mt19937_64 rng(7);
    const CliffordElement id;
    for (int t = 0; t < 1000; ++t) {
      const CliffordElement a = reduce(rand_word(rng, 6));
      const CliffordElement b = reduce(rand_word(rng, 6));
      const CliffordElement c = reduce(rand_word(rng, 6));
      CHECK(cliff_add(cliff_add(a, b), c) == cliff_add(a, cliff_add(b, c)));
      CHECK(cliff_add(a, cliff_neg(a)) == id);
      CHECK(cliff_add(id, a) == a);
    }
  }
}

TEST_CASE("sign and comparison") {
  SUBCASE("generators are positive and ordered by alpha") {
    CHECK(cliff_sign(CliffordElement::generator(Rational(-7))) == Sign::Positive);
    CHECK(cliff_compare(CliffordElement::generator(Rational(1, 2)),
                        CliffordElement::generator(Rational(3, 4))) == Cmp::Less);
  }
  SUBCASE("g(0) - g(1) is negative") {
    const CliffordElement e = CliffordElement::from_terms({{Rational(0), 1}, {Rational(1), -1}});
    CHECK(cliff_sign(e) == Sign::Negative);
  }
  SUBCASE("identity is zero") { CHECK(cliff_sign(CliffordElement()) == Sign::Zero); }
  SUBCASE("order compatibility, sampled") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (int t = 0; t < 4000 && checked < 500; ++t) {
      const CliffordElement a = reduce(rand_word(rng, 5));
      const CliffordElement b = reduce(rand_word(rng, 5));
      const CliffordElement c = reduce(rand_word(rng, 5));
      if (cliff_compare(a, b) != Cmp::Less) continue;
      ++checked;
      CHECK(cliff_compare(cliff_add(c, a), cliff_add(c, b)) == Cmp::Less);
      CHECK(cliff_compare(cliff_add(a, c), cliff_add(b, c)) == Cmp::Less);
    }
    CHECK(checked == 500);
  }
  SUBCASE("every element sits below a generator") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 500; ++t) {
      const CliffordElement a = reduce(rand_word(rng, 8));
      if (a.is_identity()) continue;
      const Rational beta = a.terms().back().first + 1;
      CHECK(cliff_compare(a, CliffordElement::generator(beta)) == Cmp::Less);
    }
  }
}

TEST_CASE("final segments and the normality probe") {
  const CliffordElement g0 = CliffordElement::generator(Rational(0));
  SUBCASE("segment construction guards") {
    // g(-1) is positive (leading coefficient +1); -g(0) is not
    CHECK_NOTHROW((CliffordSegment(CliffordElement::generator(Rational(-1)), true)));
    CHECK_THROWS_AS((CliffordSegment(CliffordElement::multiple(-1, Rational(0)), true)),
                    InvalidSegment);
    CHECK_THROWS_AS((CliffordSegment(CliffordElement(), true)), InvalidSegment);
    CHECK_NOTHROW((CliffordSegment(CliffordElement(), false)));  // all positives
  }
  SUBCASE("closed segment at g(0): witness per the relation") {
    const auto w = probe_final_segment_normality(CliffordSegment(g0, true), 50);
    REQUIRE(w.has_value());
    CHECK(CliffordSegment(g0, true).contains(w->member));
    CHECK(cliff_conjugate(w->member, w->conjugator) == w->image);
    CHECK_FALSE(CliffordSegment(g0, true).contains(w->image));
  }
  SUBCASE("open segment at g(0)") {
    const auto w = probe_final_segment_normality(CliffordSegment(g0, false), 50);
    REQUIRE(w.has_value());
    CHECK_FALSE(CliffordSegment(g0, false).contains(w->image));
  }
  SUBCASE("segment above 2 g(5)") {
    const CliffordSegment f(CliffordElement::multiple(2, Rational(5)), true);
    const auto w = probe_final_segment_normality(f, 50);
    REQUIRE(w.has_value());
    CHECK(f.contains(w->member));
    CHECK_FALSE(f.contains(w->image));
  }
  SUBCASE("the improper segment of all positives yields nothing") {
    const CliffordSegment all(CliffordElement(), false);
    CHECK_FALSE(probe_final_segment_normality(all, 300).has_value());
  }
}

TEST_CASE("word parsing") {
  const CliffordWord w = parse_clifford_word("g(3/2) g(0)^-1 g(1)");
  REQUIRE(w.size() == 3);
  CHECK(w[0].alpha == Rational(3, 2));
  CHECK(w[1].exponent == -1);
  SUBCASE("exponents expand") {
    const CliffordWord e = parse_clifford_word("g(2)^3");
    CHECK(e.size() == 3);
    CHECK(reduce(e) == CliffordElement::multiple(3, Rational(2)));
  }
  SUBCASE("rejects junk") {
    CHECK_THROWS_AS(parse_clifford_word("h(1)"), ParseError);
    CHECK_THROWS_AS(parse_clifford_word("g(1"), ParseError);
    CHECK_THROWS_AS(parse_clifford_word("g(1)^x"), ParseError);
  }
}

TEST_SUITE_END();
