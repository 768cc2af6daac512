#include <benchmark/benchmark.h>

#include "equisum/feasibility.hpp"
#include "equisum/realnum.hpp"

namespace {

using equisum::realnum::Rational;

void BM_EncloseSqrt(benchmark::State& state) {
  const Rational q(17, 24);
  const Rational eps = Rational::pow2(-state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equisum::realnum::enclose_sqrt(q, eps));
}
BENCHMARK(BM_EncloseSqrt)->Arg(20)->Arg(64)->Arg(200);

void BM_CheckInequality(benchmark::State& state) {
  const auto p = equisum::feasibility::derive_parameters(28, 40);
  for (auto _ : state) benchmark::DoNotOptimize(equisum::feasibility::check_inequality(p));
}
BENCHMARK(BM_CheckInequality);

void BM_LemmaCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(equisum::feasibility::lemma_certificate(state.range(0)));
}
BENCHMARK(BM_LemmaCertificate)->Arg(2)->Arg(40);

}  // namespace
