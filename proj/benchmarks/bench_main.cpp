#include <benchmark/benchmark.h>

#include "surftrace/matchenum.hpp"
#include "surftrace/montecarlo.hpp"
#include "surftrace/surfacegeom.hpp"
#include "surftrace/weingarten.hpp"
#include "surftrace/wordintegral.hpp"
#include "surftrace/words.hpp"

using namespace surftrace;

static void BM_WordIntegral(benchmark::State& state) {
  const char* words[] = {"abAB", "abcABC", "aabbAABB"};
  Word w = parse_free_word(words[state.range(0)], 3);
  for (auto _ : state) benchmark::DoNotOptimize(haar_word_integral(3, w));
}
BENCHMARK(BM_WordIntegral)->DenseRange(0, 2);

static void BM_EntryIntegral(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(entry_integral(3, {1, 1, 2}, {1, 2, 2}, {1, 1, 2}, {2, 1, 2}, 6));
}
BENCHMARK(BM_EntryIntegral);

static void BM_EnumerateMatchStar(benchmark::State& state) {
  Word w = parse_word("abAB", 2);
  uint64_t n = 0;
  for (auto _ : state) n += enumerate_match(w, 1, 1, true, [](const MatchingDatum&) {});
  state.counters["data"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateMatchStar)->Unit(benchmark::kMillisecond);

static void BM_LabelFromTally(benchmark::State& state) {
  Word w = parse_word("abAB", 2);
  const MatchTally& t = match_tally(w, 1, 1, false);
  for (auto _ : state) benchmark::DoNotOptimize(j_from_tally(t, {{1}, {1}}));
}
BENCHMARK(BM_LabelFromTally)->Unit(benchmark::kMillisecond);

static void BM_ChiCheck(benchmark::State& state) {
  Word w = parse_word("abAB", 2);
  for (auto _ : state) benchmark::DoNotOptimize(chi_check(w, 1, 1));
}
BENCHMARK(BM_ChiCheck)->Unit(benchmark::kMillisecond);

static void BM_BuildAndCollapse(benchmark::State& state) {
  Word w = parse_word("abcABC", 2);
  std::vector<MatchingDatum> data;
  enumerate_match(w, 1, 0, true, [&](const MatchingDatum& d) {
    if (data.size() < 64) data.push_back(d);
  });
  MatchLayout lay = make_layout(w, 1, 0);
  size_t i = 0;
  for (auto _ : state) {
    DecoratedSurface s = build_surface(data[i++ % data.size()], lay);
    benchmark::DoNotOptimize(collapse(s));
  }
}
BENCHMARK(BM_BuildAndCollapse);

static void BM_HaarSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  HaarSampler s(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(haar_sample(n, s));
}
BENCHMARK(BM_HaarSample)->Arg(8)->Arg(32)->Arg(128);

static void BM_MixedCharacter(benchmark::State& state) {
  HaarSampler s(2, 16);
  CMatrix U = haar_sample(16, s);
  MixedLabel lab{{2, 1}, {1}};
  for (auto _ : state) benchmark::DoNotOptimize(mixed_character(lab, U));
}
BENCHMARK(BM_MixedCharacter);

static void BM_Dehn(benchmark::State& state) {
  Word w = parse_word("abABcdCDabABcdCDabABc", 2);
  for (auto _ : state) benchmark::DoNotOptimize(dehn_shorten(w));
}
BENCHMARK(BM_Dehn);

BENCHMARK_MAIN();
