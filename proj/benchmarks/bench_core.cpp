#include <benchmark/benchmark.h>

#include "lusztig/cone.hpp"
#include "lusztig/pquiver.hpp"
#include "lusztig/spanning.hpp"
#include "lusztig/wiring.hpp"

using namespace lusztig;

static void BM_EnumerateReducedWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_reduced_word(n, [&](const ReducedWord&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateReducedWords)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_ConeInverse(benchmark::State& state) {
  const ReducedWord w = sampled_word(static_cast<int>(state.range(0)), 1, 0);
  const ConeMatrix m = cone_matrix(w);
  for (auto _ : state) benchmark::DoNotOptimize(exact_inverse(m));
}
BENCHMARK(BM_ConeInverse)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_VerifyTheorem(benchmark::State& state) {
  const ReducedWord w = sampled_word(static_cast<int>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(w));
}
BENCHMARK(BM_VerifyTheorem)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_Chambers(benchmark::State& state) {
  const ReducedWord w = sampled_word(static_cast<int>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(chambers(build_wiring(w)));
}
BENCHMARK(BM_Chambers)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_BfzWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<int> left;
  for (int e = 2; e <= n; e += 2) left.push_back(e);
  const Quiver q = Quiver::from_left_edges(left, n);
  for (auto _ : state) benchmark::DoNotOptimize(bfz_word(q));
}
BENCHMARK(BM_BfzWord)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
