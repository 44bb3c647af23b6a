#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "semiord/classify.hpp"
#include "semiord/clifford.hpp"
#include "semiord/corpus.hpp"
#include "semiord/group.hpp"
#include "semiord/represent.hpp"

using namespace semiord;

static void BM_CorpusClassify(benchmark::State& state) {
  const auto corpus = poset_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int semis = 0;
    for (const Poset& p : corpus) semis += classify(p).is_semiorder;
    benchmark::DoNotOptimize(semis);
  }
}
BENCHMARK(BM_CorpusClassify)->Arg(5)->Arg(6);

static void BM_CorpusEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(poset_classes(static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_CorpusEnumeration)->Arg(6)->Arg(7);

static void BM_UnitRepresentation(benchmark::State& state) {
  const auto corpus = poset_corpus(6);
  std::vector<Poset> semis;
  for (const Poset& p : corpus)
    if (classify(p).is_semiorder) semis.push_back(p);
  for (auto _ : state) {
    for (const Poset& p : semis) benchmark::DoNotOptimize(unit_representation(p).offset.size());
  }
}
BENCHMARK(BM_UnitRepresentation);

static void BM_WindowPoset(benchmark::State& state) {
  const auto g = std::make_shared<ZnGroup>(WeightOrder(2, {{0, 1}, {1, 0}}),
                                           FinalSegment{{0, 1}, true});
  const long long r = state.range(0);
  const Window w = make_window(*g, {{-r, r}, {-r, r}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(window_poset(*g, w).poset.size());
  }
}
BENCHMARK(BM_WindowPoset)->Arg(4)->Arg(6)->Arg(8);

static void BM_PatternSearch(benchmark::State& state) {
  const auto g = std::make_shared<ZnGroup>(WeightOrder(2, {{0, 1}, {1, 0}}),
                                           FinalSegment{{0, 1}, true});
  const WindowPoset wp = window_poset(*g, make_window(*g, {{-6, 6}, {-6, 6}}));
  const Poset pat = one_plus_chain(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(embeds_pattern(wp.poset, pat).found);
  }
}
BENCHMARK(BM_PatternSearch);

static void BM_CliffordReduce(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-64, 64), den_pow(0, 6), expo(0, 1);
  std::vector<CliffordWord> words;
  for (int i = 0; i < 64; ++i) {
    CliffordWord w;
    for (long long k = 0; k < state.range(0); ++k)
      w.push_back({Rational(num(rng), 1LL << den_pow(rng)), expo(rng) ? 1 : -1});
    words.push_back(std::move(w));
  }
  for (auto _ : state) {
    for (const CliffordWord& w : words) benchmark::DoNotOptimize(reduce(w).terms().size());
  }
}
BENCHMARK(BM_CliffordReduce)->Arg(8)->Arg(12)->Arg(16);

static void BM_BruteForceDimension(benchmark::State& state) {
  const Poset crown = crown_s3();
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_dimension(crown, 3));
  }
}
BENCHMARK(BM_BruteForceDimension);

BENCHMARK_MAIN();
