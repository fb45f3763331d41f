#include "compcodec/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace compcodec;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_Roundtrip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_roundtrip(1, 12, mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_EccExhaustive(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_ecc_exhaustive(2, 5, mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_EccRandom(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep_ecc_random(16, 64, 2000, 7, mode_of(state)));
  }
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_Uniqueness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_uniqueness(12, mode_of(state)));
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_Roundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccExhaustive)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Uniqueness)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
