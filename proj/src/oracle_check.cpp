#include <algorithm>
#include <cmath>
#include <random>

#include "idisc/error.hpp"
#include "idisc/solver.hpp"

namespace idisc {

bool costs_agree(double a, double b) noexcept {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= kTieTolerance * scale || a == b;
}

OracleCheckReport oracle_check(std::size_t n, std::size_t k_max, std::size_t trials,
                               std::uint64_t seed, bool parallel) {
  if (n < 2) throw Error(ErrorCode::too_few_points, "n must be at least 2");
  if (k_max < 1) throw Error(ErrorCode::k_zero, "k must be at least 1");
  if (k_max > n) throw Error(ErrorCode::k_too_large, "k exceeds n");

  OracleCheckReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  SolveOptions options;
  options.parallel = parallel;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Point> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = {static_cast<double>(i + 1), value(rng)};
    const DataSeries series = DataSeries::canonicalize(raw);
    for (Objective objective : {Objective::lsqm, Objective::ladm}) {
      for (std::size_t k = 1; k <= k_max; ++k) {
        const SolveResult dp = optimal_partition(series, k, objective, options);
        const SolveResult brute = brute_force_partition(series, k, objective);
        ++report.comparisons;
        if (!costs_agree(dp.total_cost, brute.total_cost) ||
            dp.partitioning.cuts() != brute.partitioning.cuts()) {
          report.mismatches.push_back({trial, objective, k, dp.total_cost, brute.total_cost,
                                       dp.partitioning.cuts(), brute.partitioning.cuts()});
        }
      }
    }
  }
  return report;
}

}  // namespace idisc
