#include "semiord/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "semiord/battery.hpp"
#include "semiord/classify.hpp"
#include "semiord/clifford.hpp"
#include "semiord/corpus.hpp"
#include "semiord/errors.hpp"
#include "semiord/group.hpp"
#include "semiord/poset.hpp"
#include "semiord/represent.hpp"

namespace semiord {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::vector<CheckResult> results;

  template <typename F>
  void check(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = Clock::now();
    try {
      std::ostringstream detail;
      r.pass = body(detail);
      r.detail = detail.str();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }
};

GroupPtr figure2_spec() {
  // Z^2 ordered by the second coordinate, then the first; the grid cone is
  // the closed principal segment at (0,1).
  WeightOrder w(2, {{0, 1}, {1, 0}});
  return std::make_shared<ZnGroup>(std::move(w), FinalSegment{{0, 1}, true});
}

GroupPtr z_threshold(long long theta, bool closed = true) {
  return std::make_shared<ZnGroup>(WeightOrder::lex(1), FinalSegment{{theta}, closed});
}

GroupPtr example4_spec() {  // Z/2 x Z, ordered by the Z part only
  return std::make_shared<LexProdGroup>(2, z_threshold(1));
}

GroupPtr example5_spec() {  // (Z, theta=2) x Z, inner-first
  return std::make_shared<LexProdGroup>(z_threshold(2), z_threshold(1));
}

GroupPtr example6_spec() {  // Z odot_{F={k>=1}, alpha=1} Z
  return std::make_shared<OdotGroup>(WeightOrder::lex(1), FinalSegment{{1}, true},
                                     z_threshold(1), Vec{1});
}

bool window_semiorder(const GroupOrder& g, const Window& w, std::ostringstream& detail) {
  const WindowPoset wp = window_poset(g, w);
  const Classification c = classify(wp.poset);
  if (c.is_interval != c.is_semiorder) {
    detail << "interval/semiorder flags split on " << g.describe();
    return false;
  }
  if (!c.is_semiorder) {
    detail << "window of " << g.describe() << " is not a semiorder";
    return false;
  }
  return true;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  Runner run;

  // ---------------------------------------------------------------- corpora
  std::vector<Poset> corpus;
  std::vector<Poset> dim_corpus;
  run.check("corpus enumeration", [&](std::ostringstream& d) {
    corpus = poset_corpus(opts.corpus_max_n);
    dim_corpus = corpus;
    for (int n = opts.corpus_max_n + 1; n <= opts.dimension_max_n; ++n) {
      auto extra = poset_classes(n);
      dim_corpus.insert(dim_corpus.end(), extra.begin(), extra.end());
    }
    d << corpus.size() << " classes up to n = " << opts.corpus_max_n << ", "
      << dim_corpus.size() << " up to n = " << opts.dimension_max_n;
    return true;
  });

  // 1. pattern-based and trace-based recognition agree corpus-wide
  run.check("criterion 1: corpus recognition equivalences", [&](std::ostringstream& d) {
    int semi = 0, inter = 0;
    for (const Poset& p : corpus) {
      const Classification c = classify(p);  // throws on any disagreement
      semi += c.is_semiorder;
      inter += c.is_interval;
    }
    d << corpus.size() << " classes (n <= " << opts.corpus_max_n << "), " << inter
      << " interval orders, " << semi << " semiorders, zero disagreements";
    return true;
  });

  // 2. finite Scott-Suppes: unit representation round-trips exactly
  run.check("criterion 2: unit representations round-trip", [&](std::ostringstream& d) {
    int represented = 0, rejected = 0;
    for (const Poset& p : corpus) {
      if (classify(p).is_semiorder) {
        const UnitRepresentation rep = unit_representation(p);
        const Poset back = poset_from_unit(rep);
        if (!(back.relation() == p.relation())) {
          d << "round trip failed on a " << p.size() << "-element semiorder";
          return false;
        }
        ++represented;
      } else {
        try {
          unit_representation(p);
          d << "a non-semiorder was not rejected";
          return false;
        } catch (const NotSemiorder&) {
          ++rejected;
        }
      }
    }
    d << represented << " semiorders represented exactly, " << rejected << " rejected";
    return true;
  });

  // 3. Rabinovitch bound, with the crown attaining 3
  run.check("criterion 3: semiorder dimension <= 3, crown attains 3", [&](std::ostringstream& d) {
    int checked = 0;
    for (const Poset& p : dim_corpus) {
      if (!classify(p).is_semiorder) continue;
      const auto dim = brute_force_dimension(p, 3);
      if (!dim) {
        d << "a semiorder on " << p.size() << " elements exceeded dimension 3";
        return false;
      }
      ++checked;
    }
    const auto crown = brute_force_dimension(crown_s3(), 3);
    if (!crown || *crown != 3) {
      d << "crown S3 dimension came out " << (crown ? std::to_string(*crown) : "Exceeded");
      return false;
    }
    d << checked << " semiorders (n <= " << opts.dimension_max_n
      << ") all have dimension <= 3; dim(S3) = 3";
    return true;
  });

  // 4. three-order realizer on integer windows
  run.check("criterion 4: dimension-3 realizer exact on windows", [&](std::ostringstream& d) {
    for (long long alpha = 1; alpha <= 3; ++alpha) {
      std::vector<Rational> keys;
      for (long long v = -4 * alpha; v <= 4 * alpha; ++v) keys.emplace_back(v);
      const Realizer r = realizer_dim3_threshold(keys, Rational(alpha));
      const Poset p = threshold_poset(keys, Rational(alpha));
      if (!realizer_matches(r, p)) {
        d << "realizer mismatch at alpha=" << alpha;
        return false;
      }
    }
    d << "alpha in {1,2,3}, windows [-4a,4a], all intersections exact";
    return true;
  });

  // 5. pattern transfer (1+n vs (q+1)+p) with zero violations
  run.check("criterion 5: pattern transfer co-occurrence", [&](std::ostringstream& d) {
    int reports = 0;
    for (long long theta = 2; theta <= 6; ++theta) {
      const GroupPtr g = z_threshold(theta);
      const Window w = make_window(*g, {{-20, 20}});
      for (int n = 2; n <= 5; ++n) {
        const TransferReport rep = pattern_transfer_check(*g, w, n);
        if (rep.violation) {
          d << "violation for Z theta=" << theta << ", n=" << n << ": " << rep.detail;
          return false;
        }
        ++reports;
      }
    }
    const GroupPtr fig = figure2_spec();
    const Window w2 = make_window(*fig, {{-6, 6}, {-6, 6}});
    for (int n = 2; n <= 5; ++n) {
      const TransferReport rep = pattern_transfer_check(*fig, w2, n);
      if (rep.violation) {
        d << "violation for figure-2 spec, n=" << n << ": " << rep.detail;
        return false;
      }
      ++reports;
    }
    d << reports << " transfer reports, zero violations";
    return true;
  });

  // 6. randomized Z^2 weight orders: interval = semiorder, pred = weight order
  run.check("criterion 6: randomized Z^2 specs", [&](std::ostringstream& d) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long long> entry(-4, 4), tentry(-3, 3);
    std::uniform_int_distribution<int> flavor(0, 1);
    int done = 0;
    while (done < opts.group_specs) {
      std::vector<Vec> rows{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}};
      std::unique_ptr<ZnGroup> g;
      try {
        WeightOrder w(2, rows);
        Vec theta{tentry(rng), tentry(rng)};
        const Vec zero{0, 0};
        if (w.compare(theta, zero) == Cmp::Equal) continue;
        if (w.compare(theta, zero) == Cmp::Less) theta = vec_neg(theta);
        g = std::make_unique<ZnGroup>(w, FinalSegment{theta, flavor(rng) == 0});
      } catch (const DimensionError&) {
        continue;  // singular draw
      }
      const Window w = make_window(*g, {{-6, 6}, {-6, 6}});
      std::ostringstream sub;
      if (!window_semiorder(*g, w, sub)) {
        d << "spec " << done << ": " << sub.str();
        return false;
      }
      const ThresholdReport rep = verify_threshold(*g, w);
      if (!rep.pred_total || !rep.pred_antisymmetric || !rep.pred_matches_weight_order) {
        d << "spec " << done << " (" << g->describe() << "): pred trace mismatch";
        return false;
      }
      ++done;
    }
    d << done << " random specs, zero exceptions";
    return true;
  });

  // 7. the figure-2 grid, exactly
  run.check("criterion 7: figure-2 reproduction", [&](std::ostringstream& d) {
    const GroupPtr g = figure2_spec();
    const Window w5 = make_window(*g, {{-5, 5}, {-5, 5}});
    std::set<Vec> expected;
    for (long long n = -5; n <= 5; ++n) {
      if (n != 0) expected.insert({n, 0});
      if (n < 0) expected.insert({n, 1});
      if (n > 0) expected.insert({n, -1});
    }
    const std::vector<Vec> got = inc0(*g, w5);
    if (std::set<Vec>(got.begin(), got.end()) != expected) {
      d << "inc((0,0)) in [-5,5]^2 differs from the grid figure";
      return false;
    }
    const Window w6 = make_window(*g, {{-6, 6}, {-6, 6}});
    const SubgroupReport rep = subgroups_KAI(*g, w6);
    if (rep.K.j != 0 || rep.A.j != 1 || rep.I.j != 2 || !rep.window_cross_check()) {
      d << "K/A/I came out K=" << rep.K.text << " A=" << rep.A.text << " I=" << rep.I.text;
      return false;
    }
    if (!verify_threshold(*g, w6).confirmed()) {
      d << "threshold confirmation failed";
      return false;
    }
    d << "inc(0) has " << got.size() << " elements; K={0}, A=" << rep.A.text
      << ", I=Z^2; threshold confirmed";
    return true;
  });

  // 8. weak-order characterization on both sides
  run.check("criterion 8: weak-order criterion both ways", [&](std::ostringstream& d) {
    {
      const GroupPtr g = example4_spec();
      const Window w = make_window(*g, {{-4, 4}});
      std::vector<Vec> inc = inc0(*g, w);
      inc.push_back(g->zero());
      for (const Vec& a : inc)
        for (const Vec& b : inc) {
          if (a != b && (g->lt(a, b) || g->lt(b, a))) {
            d << "lexprod inc(0) u {0} is not an antichain";
            return false;
          }
          const Vec s = g->sub(a, b);
          if (std::find(inc.begin(), inc.end(), s) == inc.end()) {
            d << "lexprod inc(0) u {0} is not closed under subtraction";
            return false;
          }
        }
    }
    {
      const GroupPtr g = z_threshold(2);
      const Window w = make_window(*g, {{-5, 5}});
      std::vector<Vec> inc = inc0(*g, w);
      inc.push_back(g->zero());
      std::set<Vec> incset(inc.begin(), inc.end());
      if (incset != std::set<Vec>{{-1}, {0}, {1}}) {
        d << "Z theta=2 inc(0) u {0} is not {-1,0,1}";
        return false;
      }
      bool antichain = true, closed = true;
      for (const Vec& a : inc)
        for (const Vec& b : inc) {
          if (a != b && (g->lt(a, b) || g->lt(b, a))) antichain = false;
          if (w.contains(g->sub(a, b)) && !incset.count(g->sub(a, b))) closed = false;
        }
      if (antichain || closed) {
        d << "Z theta=2 should fail both the antichain and subgroup tests";
        return false;
      }
    }
    d << "lexprod side: antichain + subgroup; Z theta=2 side: both fail";
    return true;
  });

  // 9. examples 4, 5, 6 classified on windows
  run.check("criterion 9: examples 4-6 window claims", [&](std::ostringstream& d) {
    {
      const GroupPtr g = example4_spec();
      const Window w = make_window(*g, {{-4, 4}});
      if (!window_semiorder(*g, w, d)) return false;
      if (verify_threshold(*g, w).k_trivial) {
        d << "example 4 should have K != {0}";
        return false;
      }
    }
    {
      const GroupPtr g = example5_spec();
      const Window w = make_window(*g, {{-4, 4}, {-4, 4}});
      if (!window_semiorder(*g, w, d)) return false;
      if (!verify_threshold(*g, w).confirmed()) {
        d << "example 5 window failed the threshold check";
        return false;
      }
    }
    {
      const GroupPtr g = example6_spec();
      const Window w = make_window(*g, {{-4, 4}, {-4, 4}});
      if (!window_semiorder(*g, w, d)) return false;
      const ThresholdReport rep = verify_threshold(*g, w);
      if (!rep.confirmed()) {
        d << "example 6 window failed the threshold check";
        return false;
      }
      // pred trace must be the lexicographic sum: b first, then a
      const WindowPoset wp = window_poset(*g, w);
      const Traces t = traces(wp.poset);
      const Window inner = w.interior(g->margin());
      for (std::size_t i = 0; i < wp.elements.size(); ++i) {
        for (std::size_t j = 0; j < wp.elements.size(); ++j) {
          const Vec &x = wp.elements[i], &y = wp.elements[j];
          if (!inner.contains(x) || !inner.contains(y)) continue;
          const bool lex = x[1] < y[1] || (x[1] == y[1] && x[0] <= y[0]);
          if (t.pred.le(static_cast<int>(i), static_cast<int>(j)) != lex) {
            d << "example 6 pred trace is not the expected lexicographic order";
            return false;
          }
        }
      }
    }
    d << "example 4: semiorder, K nontrivial; examples 5, 6: threshold confirmed";
    return true;
  });

  // 10. the Clifford engine end to end
  run.check("criterion 10: Clifford engine", [&](std::ostringstream& d) {
    std::mt19937_64 rng(opts.seed ^ 0xc11ff0d);
    std::uniform_int_distribution<int> num(-64, 64), den_pow(0, 6), expo(0, 1), len(0, 12);
    auto rand_word = [&](int maxlen) {
      CliffordWord w;
      const int L = len(rng) % (maxlen + 1);
      for (int i = 0; i < L; ++i)
        w.push_back({Rational(num(rng), 1LL << den_pow(rng)), expo(rng) ? 1 : -1});
      return w;
    };
    auto rand_elem = [&](int maxlen) { return reduce(rand_word(maxlen)); };

    // (a) confluence fuzz: two strategies, checked swaps on one of them
    for (int t = 0; t < opts.clifford_fuzz; ++t) {
      const CliffordWord w = rand_word(12);
      if (!(reduce_checked(w) == reduce_rtl(w))) {
        d << "confluence fuzz found diverging strategies at trial " << t;
        return false;
      }
    }
    // (b) group axioms
    const CliffordElement id;
    for (int t = 0; t < opts.clifford_fuzz; ++t) {
      const CliffordElement a = rand_elem(6), b = rand_elem(6), c = rand_elem(6);
      if (!(cliff_add(cliff_add(a, b), c) == cliff_add(a, cliff_add(b, c)))) {
        d << "associativity failed at trial " << t;
        return false;
      }
      if (!(cliff_add(a, cliff_neg(a)) == id) || !(cliff_add(cliff_neg(a), a) == id)) {
        d << "inverses failed at trial " << t;
        return false;
      }
      if (!(cliff_add(a, id) == a) || !(cliff_add(id, a) == a)) {
        d << "identity failed at trial " << t;
        return false;
      }
    }
    // (c) the defining relation holds under the engine
    for (int t = 0; t < opts.clifford_relation_samples; ++t) {
      Rational a(num(rng), 1LL << den_pow(rng)), b(num(rng), 1LL << den_pow(rng));
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      const CliffordElement lhs = reduce({{a, 1}, {b, 1}});
      const CliffordElement rhs = reduce({{(a + b) / 2, 1}, {a, 1}});
      if (!(lhs == rhs)) {
        d << "defining relation violated at trial " << t;
        return false;
      }
    }
    // (d) order compatibility
    int compat_checked = 0;
    for (int t = 0; t < opts.clifford_relation_samples * 8 && compat_checked < opts.clifford_relation_samples; ++t) {
      const CliffordElement a = rand_elem(5), b = rand_elem(5), c = rand_elem(5);
      if (cliff_compare(a, b) != Cmp::Less) continue;
      ++compat_checked;
      if (cliff_compare(cliff_add(c, a), cliff_add(c, b)) != Cmp::Less ||
          cliff_compare(cliff_add(a, c), cliff_add(b, c)) != Cmp::Less) {
        d << "order compatibility failed";
        return false;
      }
    }
    if (compat_checked < opts.clifford_relation_samples) {
      d << "could not draw enough comparable pairs (" << compat_checked << ")";
      return false;
    }
    // (e) normality witnesses for the three named segments
    const CliffordElement g0 = CliffordElement::generator(0);
    const CliffordElement twog5 = CliffordElement::multiple(2, 5);
    for (const CliffordSegment& f : {CliffordSegment(g0, true), CliffordSegment(g0, false),
                                     CliffordSegment(twog5, true)}) {
      const auto witness = probe_final_segment_normality(f, 200, opts.seed);
      if (!witness) {
        d << "no normality witness for " << f.str();
        return false;
      }
      if (!f.contains(witness->member) ||
          !(cliff_conjugate(witness->member, witness->conjugator) == witness->image) ||
          f.contains(witness->image)) {
        d << "witness for " << f.str() << " failed its checks";
        return false;
      }
    }
    d << opts.clifford_fuzz << " confluence words, " << opts.clifford_fuzz
      << " axiom triples, " << opts.clifford_relation_samples
      << " relation and " << compat_checked
      << " compatibility samples, 3 normality witnesses";
    return true;
  });

  // 11. the embeddability battery
  run.check("criterion 11: embeddability battery", [&](std::ostringstream& d) {
    const PreceqResult r1 = preceq_battery(two_plus_two(), chain(2));
    if (!r1.refuted) {
      d << "2+2 preceq chain-2 not refuted";
      return false;
    }
    const PreceqResult r2 = preceq_battery(antichain(3), antichain(2));
    if (!r2.refuted) {
      d << "antichain-3 preceq antichain-2 not refuted";
      return false;
    }
    const std::vector<Poset> s3{two_plus_two(), three_plus_one(), one_plus_chain(3)};
    for (std::size_t i = 0; i < s3.size(); ++i)
      for (std::size_t j = 0; j < s3.size(); ++j) {
        if (i == j) continue;
        const PreceqResult r = preceq_battery(s3[i], s3[j]);
        if (r.refuted) {
          d << "S3 pair (" << i << "," << j << ") wrongly refuted by " << r.witness_group;
          return false;
        }
      }
    d << "refuted by: " << r1.witness_group << " / " << r2.witness_group
      << "; S3 pairwise not refuted";
    return true;
  });

  if (!opts.include_module_invariants) return std::move(run.results);

  // ------------------------------------------------- module invariant suites
  run.check("invariants: poset-core", [&](std::ostringstream& d) {
    for (const Poset& p : corpus) {
      const IncComponents comps = incomparability_components(p);
      std::vector<Poset> parts;
      for (const auto& part : comps.parts) parts.push_back(p.induced(part));
      const Poset rebuilt = lex_sum(chain(static_cast<int>(parts.size())), parts);
      if (!isomorphic(rebuilt, p)) {
        d << "lex-sum reconstruction failed on an n=" << p.size() << " poset";
        return false;
      }
    }
    // on chains, convex and autonomous coincide, over all subsets
    for (int n = 1; n <= 5; ++n) {
      const Poset c = chain(n);
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
          if (mask & (1 << v)) subset.push_back(v);
        const SubsetProperties sp = subset_properties(c, subset);
        if (sp.convex != sp.autonomous) {
          d << "convex/autonomous split on a chain subset";
          return false;
        }
      }
    }
    d << "reconstruction over " << corpus.size() << " classes; chain subsets agree";
    return true;
  });

  run.check("invariants: order-classify", [&](std::ostringstream& d) {
    for (const Poset& p : corpus) {
      const Traces t = traces(p);
      for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
          if (p.less(i, j) && !(t.pred.lt(i, j) && t.succ.lt(i, j))) {
            d << "traces fail to extend the strict order";
            return false;
          }
      // weak order iff incomparable-or-equal is an equivalence
      bool equiv = true;
      for (int a = 0; a < p.size() && equiv; ++a)
        for (int b = 0; b < p.size() && equiv; ++b)
          for (int c = 0; c < p.size() && equiv; ++c) {
            const bool ab = a == b || p.incomparable(a, b);
            const bool bc = b == c || p.incomparable(b, c);
            const bool ac = a == c || p.incomparable(a, c);
            if (ab && bc && !ac) equiv = false;
          }
      if (classify(p).is_weak != equiv) {
        d << "weak-order criterion mismatch";
        return false;
      }
    }
    d << "traces extend <, weak-order equivalence criterion matches, corpus-wide";
    return true;
  });

  run.check("invariants: order-represent", [&](std::ostringstream& d) {
    int count = 0;
    for (const Poset& p : corpus) {
      if (!classify(p).is_interval) continue;
      const IntervalRepresentation rep = interval_representation(p);
      if (!(poset_from_intervals(rep).relation() == p.relation())) {
        d << "interval representation round trip failed";
        return false;
      }
      ++count;
    }
    d << count << " interval orders round-tripped";
    return true;
  });

  run.check("invariants: ogroup-engine", [&](std::ostringstream& d) {
    struct Inst {
      GroupPtr g;
      Window w;
    };
    std::vector<Inst> insts;
    insts.push_back({z_threshold(2), make_window(*z_threshold(2), {{-8, 8}})});
    insts.push_back({figure2_spec(), make_window(*figure2_spec(), {{-5, 5}, {-5, 5}})});
    insts.push_back({example4_spec(), make_window(*example4_spec(), {{-4, 4}})});
    insts.push_back({example5_spec(), make_window(*example5_spec(), {{-4, 4}, {-4, 4}})});
    insts.push_back({example6_spec(), make_window(*example6_spec(), {{-4, 4}, {-4, 4}})});
    for (const Inst& inst : insts) {
      if (!compatibility_sample(*inst.g, 40, 10000, opts.seed)) {
        d << "translation compatibility failed for " << inst.g->describe();
        return false;
      }
      // pred and succ traces agree on the interior (they do on the group)
      const WindowPoset wp = window_poset(*inst.g, inst.w);
      const Traces t = traces(wp.poset);
      const Window inner = inst.w.interior(inst.g->margin());
      for (std::size_t i = 0; i < wp.elements.size(); ++i)
        for (std::size_t j = 0; j < wp.elements.size(); ++j) {
          if (!inner.contains(wp.elements[i]) || !inner.contains(wp.elements[j])) continue;
          if (t.pred.le(static_cast<int>(i), static_cast<int>(j)) !=
              t.succ.le(static_cast<int>(i), static_cast<int>(j))) {
            d << "pred and succ traces split on " << inst.g->describe();
            return false;
          }
        }
      std::ostringstream sub;
      if (!window_semiorder(*inst.g, inst.w, sub)) {
        d << sub.str();
        return false;
      }
      // semiorder <=> inc(0) bipartite: no 3-chain among the incomparables
      {
        const std::vector<Vec> incv = inc0(*inst.g, inst.w);
        std::vector<int> idx;
        for (const Vec& v : incv) idx.push_back(wp.index_of(v));
        if (antichain_cover_number(wp.poset.induced(idx)) > 2) {
          d << "inc(0) is not bipartite for " << inst.g->describe();
          return false;
        }
      }
    }
    // quotient by K: example 4's pred trace collapses to a chain
    {
      const GroupPtr g = example4_spec();
      const Window w = make_window(*g, {{-4, 4}});
      const WindowPoset wp = window_poset(*g, w);
      const Window inner = w.interior(g->margin());
      std::vector<int> interior;
      for (std::size_t i = 0; i < wp.elements.size(); ++i)
        if (inner.contains(wp.elements[i])) interior.push_back(static_cast<int>(i));
      const Poset restricted = wp.poset.induced(interior);
      const auto [quot, proj] = quotient_by_equiv(traces(restricted).pred);
      if (!classify(quot).is_chain) {
        d << "example 4 pred quotient is not a chain";
        return false;
      }
    }
    // covers surrogate on connected specs: interior elements have in-window
    // covers both ways (maximal chains look like Z)
    for (const Inst& inst : {insts[0], insts[1]}) {
      const WindowPoset wp = window_poset(*inst.g, inst.w);
      const Window inner = inst.w.interior(inst.g->margin());
      for (std::size_t i = 0; i < wp.elements.size(); ++i) {
        if (!inner.contains(wp.elements[i])) continue;
        bool up = false, down = false;
        for (std::size_t j = 0; j < wp.elements.size(); ++j) {
          if (wp.poset.less(static_cast<int>(i), static_cast<int>(j))) up = true;
          if (wp.poset.less(static_cast<int>(j), static_cast<int>(i))) down = true;
        }
        if (!up || !down) {
          d << "interior element without in-window covers in " << inst.g->describe();
          return false;
        }
      }
    }
    // convex-subgroup chain property from the exact indices
    {
      const GroupPtr g = figure2_spec();
      const Window w = make_window(*g, {{-5, 5}, {-5, 5}});
      const SubgroupReport rep = subgroups_KAI(*g, w);
      for (int j = 0; j <= 2; ++j)
        if (!(j <= rep.A.j || rep.I.j <= j)) {
          d << "H_" << j << " breaks the convex-subgroup chain property";
          return false;
        }
    }
    d << insts.size() << " specs: compatibility, pred=succ, semiorder windows, covers, chain property";
    return true;
  });

  run.check("invariants: clifford-group", [&](std::ostringstream& d) {
    std::mt19937_64 rng(opts.seed ^ 0xb0b);
    std::uniform_int_distribution<int> num(-64, 64), den_pow(0, 6), expo(0, 1), len(1, 8);
    auto rand_elem = [&] {
      CliffordWord w;
      const int L = len(rng);
      for (int i = 0; i < L; ++i)
        w.push_back({Rational(num(rng), 1LL << den_pow(rng)), expo(rng) ? 1 : -1});
      return reduce(w);
    };
    for (int t = 0; t < 1000; ++t) {
      const CliffordElement a = rand_elem();
      if (a.is_identity()) continue;
      // every element is exceeded by a generator
      const Rational beta = a.terms().back().first + 1;
      if (cliff_compare(a, CliffordElement::generator(beta)) != Cmp::Less) {
        d << "boundedness by generators failed";
        return false;
      }
    }
    d << "1000 boundedness samples";
    return true;
  });

  return std::move(run.results);
}

}  // namespace semiord
