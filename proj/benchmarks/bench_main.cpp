#include <benchmark/benchmark.h>

#include <cmath>

#include "weylbrane/cosmology/audit.hpp"
#include "weylbrane/cosmology/power_law.hpp"
#include "weylbrane/geometry/curvature.hpp"
#include "weylbrane/weyl/residuals.hpp"

using namespace weylbrane;

static void BM_CurvatureWarped(benchmark::State& state) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const MetricField g = m.metric();
  const std::vector<double> x = {2.0, 0.1, 0.2, 0.3, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(curvature(g, x));
}
BENCHMARK(BM_CurvatureWarped);

static void BM_WeylCurvatureWarped(benchmark::State& state) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const std::vector<double> x = {2.0, 0.1, 0.2, 0.3, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(weyl_curvature(m.metric(), m.phi(), x));
}
BENCHMARK(BM_WeylCurvatureWarped);

static void BM_EinsteinDivergence(benchmark::State& state) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const std::vector<double> x = {2.0, 0.1, 0.2, 0.3, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(einstein_divergence(m.metric(), x));
}
BENCHMARK(BM_EinsteinDivergence);

static void BM_SplitEquations(benchmark::State& state) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const std::vector<double> x = {2.0, 0.1, 0.2, 0.3, 0.5};
  for (auto _ : state) benchmark::DoNotOptimize(split_terms(m.frame(), m.lapse(), x));
}
BENCHMARK(BM_SplitEquations);

static void BM_SolveU(benchmark::State& state) {
  const double tf = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_u_numeric(0.45, 1.0, 1.1557, 1.0, tf));
}
BENCHMARK(BM_SolveU)->Arg(10)->Arg(1000);

static void BM_Audit(benchmark::State& state) {
  const WarpedModel m = warped_model(PowerLawScenario{});
  const auto ts = TimeGrid{}.points();
  for (auto _ : state) benchmark::DoNotOptimize(audit_model(m, ts));
}
BENCHMARK(BM_Audit);

BENCHMARK_MAIN();
