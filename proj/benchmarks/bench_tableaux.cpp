#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "permpow/series.hpp"
#include "permpow/tableaux.hpp"

using namespace permpow;

namespace {

Permutation random_permutation(int n, unsigned seed) {
  std::vector<int> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(word.begin(), word.end(), rng);
  return Permutation(std::move(word));
}

void BM_Rsk(benchmark::State& state) {
  const Permutation p = random_permutation(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(rsk(p));
}
BENCHMARK(BM_Rsk)->Arg(50)->Arg(200);

void BM_Evacuate(benchmark::State& state) {
  const auto [P, Q] = rsk(random_permutation(static_cast<int>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(evacuate(P));
}
BENCHMARK(BM_Evacuate)->Arg(50)->Arg(200);

void BM_EnumerateSyt(benchmark::State& state) {
  const Partition shape({4, 3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_syt(shape).size());
}
BENCHMARK(BM_EnumerateSyt);

void BM_HookCount(benchmark::State& state) {
  const Partition shape = Partition::rectangle(static_cast<int>(state.range(0)),
                                               static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hook_length_count(shape));
}
BENCHMARK(BM_HookCount)->Arg(10)->Arg(30);

void BM_SeriesExpand(benchmark::State& state) {
  const RationalGF gf = theorem4_gf();
  for (auto _ : state) benchmark::DoNotOptimize(expand(gf, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SeriesExpand)->Arg(100)->Arg(1000);

} // namespace

BENCHMARK_MAIN();
