#include <benchmark/benchmark.h>

#include "weylbrane/cli/commands.hpp"

static void BM_Sweep(benchmark::State& state) {
  weylbrane::cli::SweepSpec spec;
  spec.steps = 1001;
  spec.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weylbrane::cli::render_sweep(spec));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->UseRealTime();
