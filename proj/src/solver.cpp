#include "idisc/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "idisc/error.hpp"

namespace idisc {
namespace {

void check_k(std::size_t n, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::k_zero, "k must be at least 1");
  if (k > n) {
    throw Error(ErrorCode::k_too_large,
                "k = " + std::to_string(k) + " exceeds the number of points " + std::to_string(n));
  }
}

double direct_total(const DataSeries& series, std::span<const std::size_t> cuts,
                    Objective objective) {
  double total = 0.0;
  std::size_t lo = 0;
  for (std::size_t c : cuts) {
    total += interval_cost(series, lo, c, objective);
    lo = c;
  }
  return total + interval_cost(series, lo, series.size(), objective);
}

// Advances `cuts` to the next strictly increasing vector over 1..n-1 in
// lexicographic order. Returns false after the last one.
bool next_cut_vector(std::vector<std::size_t>& cuts, std::size_t n) {
  const std::size_t r = cuts.size();
  for (std::size_t pos = r; pos-- > 0;) {
    // largest value slot pos may take: n - 1 - (r - 1 - pos)
    if (cuts[pos] < n - r + pos) {
      ++cuts[pos];
      for (std::size_t q = pos + 1; q < r; ++q) cuts[q] = cuts[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double tie_slack(double optimum, const DataSeries& series, Objective objective) {
  double magnitude = 0.0;
  for (double y : series.ys()) magnitude = std::max(magnitude, std::abs(y));
  // Rounding noise of one deviation term, summed over all points.
  const double unit = 64.0 * std::numeric_limits<double>::epsilon() * magnitude;
  const double floor = static_cast<double>(series.size()) *
                       (objective == Objective::lsqm ? unit * unit : unit);
  return kTieTolerance * std::abs(optimum) + floor;
}

DpTable::DpTable(std::size_t n, std::size_t j_max)
    : n_(n), j_max_(j_max), cells_(j_max * (n + 1), std::numeric_limits<double>::infinity()) {}

DpTable run_dp(const CostTable& table, std::size_t j_max, bool parallel, bool full_top_layer) {
  const std::size_t n = table.n();
  check_k(n, j_max);
  DpTable dp(n, j_max);
  kernels::dp_first_layer(table, dp.layer(1));
  for (std::size_t j = 2; j <= j_max; ++j) {
    const std::size_t m_end = (j < j_max || full_top_layer) ? n - j + 1 : 1;
    if (parallel) {
      kernels::dp_layer_parallel(table, dp.layer(j - 1), dp.layer(j), j, m_end);
    } else {
      kernels::dp_layer_serial(table, dp.layer(j - 1), dp.layer(j), j, m_end);
    }
  }
  return dp;
}

SolveResult describe(const DataSeries& series, Partitioning partitioning, Objective objective,
                     SolverKind solver, double total_cost) {
  if (partitioning.n() != series.size()) {
    throw Error(ErrorCode::length_mismatch, "partitioning does not match series length");
  }
  SolveResult result;
  result.objective = objective;
  result.solver = solver;
  result.total_cost = total_cost;
  for (const IndexRange& r : partitioning.ranges()) {
    result.per_partition.push_back({r, interval_mean(series, r.lo, r.hi),
                                    interval_cost(series, r.lo, r.hi, objective)});
  }
  result.cut_points = cuts_to_x(series, partitioning);
  result.tie_split = tie_split_flags(series, partitioning.cuts());
  result.partitioning = std::move(partitioning);
  return result;
}

SolveResult optimal_partition(const DataSeries& series, const CostTable& table, std::size_t k,
                              bool parallel) {
  const std::size_t n = series.size();
  check_k(n, k);
  if (table.n() != n) throw Error(ErrorCode::length_mismatch, "cost table built for another series");

  const DpTable dp = run_dp(table, k, parallel);
  const double optimum = dp.best(k, 0);
  const double bound = optimum + tie_slack(optimum, series, table.objective());

  // Walk forward taking the smallest next cut that still admits an optimal
  // completion; this yields the lexicographically smallest optimal vector.
  std::vector<std::size_t> cuts;
  cuts.reserve(k - 1);
  CostTable::Scratch scratch;
  double spent = 0.0;
  std::size_t m = 0;
  for (std::size_t j = k; j >= 2; --j) {
    const auto row = table.row(m, scratch);
    const std::size_t t_last = n - j + 1;
    std::size_t chosen = 0;
    std::size_t argmin = m + 1;
    double min_value = std::numeric_limits<double>::infinity();
    for (std::size_t t = m + 1; t <= t_last; ++t) {
      const double v = row[t - m - 1] + dp.best(j - 1, t);
      if (spent + v <= bound) {
        chosen = t;
        break;
      }
      if (v < min_value) {
        min_value = v;
        argmin = t;
      }
    }
    if (chosen == 0) chosen = argmin;
    spent += row[chosen - m - 1];
    cuts.push_back(chosen);
    m = chosen;
  }

  return describe(series, Partitioning(n, std::move(cuts)), table.objective(), SolverKind::dp,
                  optimum);
}

SolveResult optimal_partition(const DataSeries& series, std::size_t k, Objective objective,
                              const SolveOptions& options) {
  check_k(series.size(), k);
  CostTableOptions cost = options.cost;
  cost.parallel = options.parallel;
  const CostTable table(series, objective, cost);
  return optimal_partition(series, table, k, options.parallel);
}

std::optional<std::uint64_t> partition_count(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) return 0;
  const std::uint64_t top = n - 1;
  std::uint64_t r = std::min<std::uint64_t>(k - 1, top - (k - 1));
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (top - r + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(acc);
}

SolveResult brute_force_partition(const DataSeries& series, std::size_t k, Objective objective,
                                  std::uint64_t cap) {
  const std::size_t n = series.size();
  check_k(n, k);
  const auto count = partition_count(n, k);
  if (!count || *count > cap) {
    throw Error(ErrorCode::enumeration_too_large,
                "C(" + std::to_string(n - 1) + ", " + std::to_string(k - 1) + ") = " +
                    (count ? std::to_string(*count) : std::string("> 2^64")) +
                    " candidates exceeds the cap of " + std::to_string(cap));
  }

  auto first = [&] {
    std::vector<std::size_t> cuts(k - 1);
    std::iota(cuts.begin(), cuts.end(), std::size_t{1});
    return cuts;
  };

  double optimum = std::numeric_limits<double>::infinity();
  {
    auto cuts = first();
    do {
      optimum = std::min(optimum, direct_total(series, cuts, objective));
    } while (next_cut_vector(cuts, n));
  }

  const double bound = optimum + tie_slack(optimum, series, objective);
  auto cuts = first();
  do {
    if (direct_total(series, cuts, objective) <= bound) break;
  } while (next_cut_vector(cuts, n));

  return describe(series, Partitioning(n, std::move(cuts)), objective, SolverKind::brute, optimum);
}

std::vector<CurvePoint> cost_curve(const DataSeries& series, std::size_t k_max, Objective objective,
                                   const SolveOptions& options) {
  const std::size_t n = series.size();
  check_k(n, k_max);
  CostTableOptions cost = options.cost;
  cost.parallel = options.parallel;
  const CostTable table(series, objective, cost);

  // Two rolling layers: only best(j, 0) is reported.
  std::vector<double> prev(n + 1), cur(n + 1);
  kernels::dp_first_layer(table, prev);
  std::vector<CurvePoint> curve{{1, prev[0]}};
  for (std::size_t j = 2; j <= k_max; ++j) {
    std::fill(cur.begin(), cur.end(), std::numeric_limits<double>::infinity());
    const std::size_t m_end = j < k_max ? n - j + 1 : 1;
    if (options.parallel) {
      kernels::dp_layer_parallel(table, prev, cur, j, m_end);
    } else {
      kernels::dp_layer_serial(table, prev, cur, j, m_end);
    }
    curve.push_back({j, cur[0]});
    std::swap(prev, cur);
  }
  return curve;
}

}  // namespace idisc
