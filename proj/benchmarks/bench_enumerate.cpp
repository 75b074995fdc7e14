#include <benchmark/benchmark.h>

#include "permpow/enumerate.hpp"

using namespace permpow;

namespace {

AvoidanceQuery make_query(int n, std::initializer_list<const char*> patterns,
                          AvoidanceMode mode) {
  AvoidanceQuery q;
  q.n = n;
  for (const char* t : patterns) q.patterns.push_back(Permutation::parse(t));
  q.mode = mode;
  return q;
}

void BM_StrongAvoid123(benchmark::State& state) {
  const auto q = make_query(static_cast<int>(state.range(0)), {"123"}, AvoidanceMode::strong);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(q).count);
}
BENCHMARK(BM_StrongAvoid123)->Arg(7)->Arg(8)->Arg(9);

void BM_StrongAvoidPair(benchmark::State& state) {
  const auto q =
      make_query(static_cast<int>(state.range(0)), {"321", "3412"}, AvoidanceMode::strong);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(q).count);
}
BENCHMARK(BM_StrongAvoidPair)->Arg(8)->Arg(10);

void BM_Powerful231(benchmark::State& state) {
  const auto q = make_query(static_cast<int>(state.range(0)), {"231"}, AvoidanceMode::powerful);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(q).count);
}
BENCHMARK(BM_Powerful231)->Arg(8)->Arg(10);

void BM_OrderFiltered312(benchmark::State& state) {
  auto q = make_query(static_cast<int>(state.range(0)), {"312"}, AvoidanceMode::plain);
  q.order_set = std::set<long long>{1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(q).count);
}
BENCHMARK(BM_OrderFiltered312)->Arg(9)->Arg(10);

} // namespace
