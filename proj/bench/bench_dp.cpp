#include <benchmark/benchmark.h>

#include <random>

#include "idisc/solver.hpp"

using namespace idisc;

namespace {

DataSeries noisy_series(std::size_t n) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> noise(0.0, 3.0);
  std::vector<Point> pts;
  for (std::size_t i = 1; i <= n; ++i) pts.push_back({static_cast<double>(i), (i * 5 / n) * 10.0 + noise(rng)});
  return DataSeries::canonicalize(pts);
}

template <bool Parallel>
void BM_LsqmLayer(benchmark::State& state) {
  const auto s = noisy_series(state.range(0));
  const CostTable table(s, Objective::lsqm);
  DpTable dp(s.size(), 2);
  kernels::dp_first_layer(table, dp.layer(1));
  for (auto _ : state) {
    if constexpr (Parallel) {
      kernels::dp_layer_parallel(table, dp.layer(1), dp.layer(2), 2, s.size() - 1);
    } else {
      kernels::dp_layer_serial(table, dp.layer(1), dp.layer(2), 2, s.size() - 1);
    }
    benchmark::DoNotOptimize(dp.layer(2).data());
  }
}
BENCHMARK(BM_LsqmLayer<false>)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LsqmLayer<true>)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_LadmTriangle(benchmark::State& state) {
  const auto s = noisy_series(state.range(0));
  CostTableOptions options;
  options.parallel = Parallel;
  for (auto _ : state) {
    CostTable table(s, Objective::ladm, options);
    benchmark::DoNotOptimize(table.dense());
  }
}
BENCHMARK(BM_LadmTriangle<false>)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LadmTriangle<true>)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

void BM_OptimalPartition(benchmark::State& state) {
  const auto s = noisy_series(state.range(0));
  SolveOptions options;
  options.parallel = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(optimal_partition(s, 5, Objective::lsqm, options).total_cost);
}
BENCHMARK(BM_OptimalPartition)->Args({5000, 0})->Args({5000, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
