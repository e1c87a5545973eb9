#include <benchmark/benchmark.h>

#include <random>

#include "xyefp/correlation.hpp"
#include "xyefp/oracle.hpp"

namespace {

xyefp::ChainParams figure_params() {
  xyefp::ChainParams p;
  p.beta_left = 0.5;
  p.beta_right = 2.0;
  p.kappa = 0.2;
  p.string_start = 1;
  return p;
}

void BM_DirectAssembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    xyefp::NessAssembler assembler(figure_params());  // cold cache each run
    benchmark::DoNotOptimize(assembler.assemble(n).theta);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DirectAssembly)->Arg(4)->Arg(8)->Arg(16)->Complexity();

void BM_StructuredAssembly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    xyefp::NessAssembler assembler(figure_params());
    benchmark::DoNotOptimize(assembler.assemble_structured(n).theta);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_StructuredAssembly)->Arg(16)->Arg(32)->Arg(64)->Complexity();

void BM_PfaffianElimination(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  xyefp::SkewMatrix a(order);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      a.upper(i, j) = xyefp::Complex(d(rng), d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(xyefp::pfaffian_elimination(a));
  state.SetComplexityN(order);
}
BENCHMARK(BM_PfaffianElimination)->Arg(32)->Arg(64)->Arg(128)->Complexity();

void BM_OracleTimeSample(benchmark::State& state) {
  xyefp::FiniteVolumeSpec spec;
  spec.window_radius = 120;
  spec.horizon = 40.0;
  xyefp::FiniteVolumeSimulator sim(spec, figure_params());
  double t = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim.theta_at_time(t, 4));
    t = t < 30.0 ? t + 0.37 : 1.0;
  }
}
BENCHMARK(BM_OracleTimeSample);

}  // namespace

BENCHMARK_MAIN();
