// Serial reference vs OpenMP fan-out for the sweep kernels, and the Jacobi
// reference eigensolver vs the production one.

#include <benchmark/benchmark.h>

#include <random>

#include "sosperfect/combinatorics.hpp"
#include "sosperfect/experiment.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/linalg.hpp"
#include "sosperfect/theta_bounds.hpp"

using namespace sosperfect;

namespace {

Execution exec_of(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "openmp x" + std::to_string(max_threads()) : "serial"); }

void BM_DefinitionScan(benchmark::State& s) {
  const Graph g = gnp_random(11, 0.5, 5);
  for (auto _ : s) benchmark::DoNotOptimize(is_perfect(g, PerfectnessMethod::definition_scan, exec_of(s)));
  label(s);
}
BENCHMARK(BM_DefinitionScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SosPerfectSweep(benchmark::State& s) {
  const Graph g = complement(cycle(9));
  for (auto _ : s) benchmark::DoNotOptimize(is_sos_perfect(g, SweepMode::full, {}, exec_of(s)));
  label(s);
}
BENCHMARK(BM_SosPerfectSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Aimp(benchmark::State& s) {
  const Graph g = gnp_random(9, 0.5, 11);
  for (auto _ : s) benchmark::DoNotOptimize(aimp(g, kAimpCap, {}, exec_of(s)));
  label(s);
}
BENCHMARK(BM_Aimp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Experiment(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(run_experiment(25, 0.5, 8, 1, {}, exec_of(s)));
  label(s);
}
BENCHMARK(BM_Experiment)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

linalg::Matrix random_symmetric(int n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> d;
  linalg::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

void BM_EigenQl(benchmark::State& s) {
  const linalg::Matrix m = random_symmetric(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(linalg::eigen_symmetric(m));
}
BENCHMARK(BM_EigenQl)->Arg(16)->Arg(64)->Arg(128);

void BM_EigenJacobi(benchmark::State& s) {
  const linalg::Matrix m = random_symmetric(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(linalg::jacobi_eigen_symmetric(m));
}
BENCHMARK(BM_EigenJacobi)->Arg(16)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
