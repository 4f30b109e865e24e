#include <benchmark/benchmark.h>

#include "nomamec/closed_form.hpp"
#include "nomamec/oracle.hpp"
#include "nomamec/strategy.hpp"

using namespace nomamec;

namespace {

const OffloadScenario kScenario({15, 20, 25, 1, 1});

void BM_HybridEnergy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hybrid_energy(kScenario, 5.0));
}
BENCHMARK(BM_HybridEnergy);

void BM_SelectStrategy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(select_strategy(kScenario));
}
BENCHMARK(BM_SelectStrategy);

void BM_OracleFixedT(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_fixed_t(kScenario, 5.0));
}
BENCHMARK(BM_OracleFixedT);

void BM_EnergySurface(benchmark::State& state) {
  const SurfaceRanges ranges{2.5, 4.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(energy_surface(kScenario, 5.0, ranges, state.range(0)));
  }
}
BENCHMARK(BM_EnergySurface)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
