#include <benchmark/benchmark.h>

#include "lv/hodge.hpp"
#include "lv/rootfilt.hpp"

namespace {

void BM_CheckConditions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto rep = lv::check_conditions(n, d);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_CheckConditions)->Args({30, 500})->Args({60, 1000})->Args({80, 3000});

void BM_Eulerian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = lv::eulerian(n);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_Eulerian)->Arg(50)->Arg(200)->Arg(400);

void BM_WpqEnumerate(benchmark::State& state) {
  const auto datum = lv::RootDatum::build(lv::RootType::A, 3);
  const auto wg = lv::WeylGroup::build(datum);
  const auto pair = lv::ParabolicPair::build(datum, {0, 1}, {2, 1, 0, -3});
  for (auto _ : state) {
    auto list = lv::wpq_enumerate(wg, pair);
    benchmark::DoNotOptimize(list);
  }
}
BENCHMARK(BM_WpqEnumerate);

}  // namespace

BENCHMARK_MAIN();
