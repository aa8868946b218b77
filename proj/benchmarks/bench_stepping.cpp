// Microbenchmarks for the FFT-driven stepping loop.
//
//   ./kgewi-microbench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <cmath>
#include <memory>

#include "kgewi/ewi.hpp"
#include "kgewi/rk4.hpp"

namespace {

using namespace kgewi;

KGEProblem benchmark_problem(double epsilon) {
  KGEProblem p;
  p.epsilon = epsilon;
  p.f = std::make_shared<CubicNonlinearity>(1.0);
  p.phi1 = [](double x) { return 2.0 * std::exp(-x * x); };
  p.phi2 = [](double x) { return 3.0 * std::exp(-x * x); };
  p.phi1_desc = "gaussian amplitude=2 width=1 center=0";
  p.phi2_desc = "gaussian amplitude=3 width=1 center=0";
  return p;
}

void BM_ForwardTransform(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const GridSpec grid = build_grid(-32.0, 32.0, M);
  RealField v(M);
  for (int j = 0; j < M; ++j) v[j] = std::exp(-grid.node(j) * grid.node(j));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_dft(grid, v));
  }
  state.SetItemsProcessed(state.iterations() * M);
}
BENCHMARK(BM_ForwardTransform)->Arg(256)->Arg(1024)->Arg(2048);

void BM_WeightTableBuild(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const GridSpec grid = build_grid(-32.0, 32.0, M);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_weight_table(grid, 0.05, 1.25e-3, 6));
  }
}
BENCHMARK(BM_WeightTableBuild)->Arg(1024);

void BM_MainStep(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  const GridSpec grid = build_grid(-32.0, 32.0, M);
  const KGEProblem p = benchmark_problem(0.05);
  const double tau = 1.25e-3;
  const WeightTable wt = build_weight_table(grid, 0.05, tau, order);
  const SolverState s0 = initial_state(p, grid);
  const SolverState s1 = first_step(p, grid, wt, s0);
  const StepPair pair{s0, s1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(main_step(p, grid, wt, pair));
  }
  state.SetItemsProcessed(state.iterations() * M);
}
BENCHMARK(BM_MainStep)
    ->Args({1024, 2})
    ->Args({1024, 4})
    ->Args({1024, 6})
    ->Args({256, 4})
    ->Args({2048, 4});

void BM_Rk4Step(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const GridSpec grid = build_grid(-32.0, 32.0, M);
  const KGEProblem p = benchmark_problem(0.05);
  const double tau = 1.25e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_rk4(p, grid, tau, tau));
  }
  state.SetItemsProcessed(state.iterations() * M);
}
BENCHMARK(BM_Rk4Step)->Arg(1024);

void BM_IntegrateHundredSteps(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const GridSpec grid = build_grid(-32.0, 32.0, 1024);
  const KGEProblem p = benchmark_problem(0.05);
  const double tau = 1.25e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate(p, grid, tau, 100.0 * tau, order));
  }
}
BENCHMARK(BM_IntegrateHundredSteps)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
