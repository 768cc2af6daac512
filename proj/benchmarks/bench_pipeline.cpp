#include <benchmark/benchmark.h>

#include "equisum/constructions.hpp"
#include "equisum/mixednorm.hpp"
#include "equisum/sweep.hpp"

namespace {

void BM_ConstructAndVerify(benchmark::State& state) {
  const long a = state.range(0);
  const long b = state.range(1);
  for (auto _ : state) {
    const auto r = equisum::constructions::construct(a, b);
    benchmark::DoNotOptimize(equisum::mixednorm::verify_equilateral(r.point_set));
  }
}
BENCHMARK(BM_ConstructAndVerify)->Args({5, 8})->Args({20, 45})->Args({30, 90});

void BM_Sweep(benchmark::State& state) {
  equisum::sweep::SweepConfig config;
  config.a_min = 2;
  config.a_max = state.range(0);
  config.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(equisum::sweep::run_sweep(config));
}
BENCHMARK(BM_Sweep)->Args({15, 1})->Args({30, 1})->Args({30, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
