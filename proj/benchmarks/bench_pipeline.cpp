#include <benchmark/benchmark.h>

#include "dsw/isolated.hpp"
#include "dsw/oracle.hpp"
#include "dsw/perturb.hpp"
#include "dsw/pipeline.hpp"
#include "dsw/wavefunc.hpp"

namespace {

void BM_SolveY(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dsw::solve_y(1.0, 2.0));
}
BENCHMARK(BM_SolveY);

void BM_Approximate(benchmark::State& state) {
  const dsw::WellSpec spec = dsw::worked_example_spec();
  for (auto _ : state) benchmark::DoNotOptimize(dsw::approximate(spec));
}
BENCHMARK(BM_Approximate);

void BM_PerturbedLevels(benchmark::State& state) {
  const dsw::SymmetricBase base = dsw::symmetric_base(dsw::worked_example_spec());
  double v = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dsw::perturbed_levels(base, v * base.delta_e));
    v += 1e-3;
  }
}
BENCHMARK(BM_PerturbedLevels);

void BM_AssembleAndNormalise(benchmark::State& state) {
  const dsw::WellSpec spec = dsw::worked_example_spec();
  const dsw::Approximation ap = dsw::approximate(spec);
  for (auto _ : state) {
    const auto model = dsw::assemble(spec, ap.reduced, ap.excited);
    benchmark::DoNotOptimize(dsw::probabilities(model));
  }
}
BENCHMARK(BM_AssembleAndNormalise);

void BM_Shoot(benchmark::State& state) {
  const dsw::WellSpec spec = dsw::worked_example_spec();
  for (auto _ : state) benchmark::DoNotOptimize(dsw::shoot(spec, 0.25));
}
BENCHMARK(BM_Shoot);

void BM_FindLevel(benchmark::State& state) {
  const dsw::WellSpec spec = dsw::worked_example_spec();
  for (auto _ : state) benchmark::DoNotOptimize(dsw::find_level(spec, dsw::Parity::Ground, 1e-13));
}
BENCHMARK(BM_FindLevel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
