#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idisc/core.hpp"
#include "idisc/cost.hpp"

namespace idisc {

/// Relative tolerance under which two total costs count as tied.
inline constexpr double kTieTolerance = 1e-9;
/// Default cap on the number of candidates brute_force_partition may enumerate.
inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

struct SolveOptions {
  bool parallel = true;
  CostTableOptions cost{};
};

/// Absolute slack used for tie detection around an optimum.
double tie_slack(double optimum, const DataSeries& series, Objective objective);

/// Suffix dynamic-programming table.
///
/// best(j, m) is the minimal cost of splitting the points after position m,
/// i.e. (m, n], into j partitions. Rows 1..j_max-1 are filled for every
/// feasible m; the top row only needs m = 0 and is filled just there.
class DpTable {
 public:
  DpTable(std::size_t n, std::size_t j_max);

  std::size_t n() const noexcept { return n_; }
  std::size_t j_max() const noexcept { return j_max_; }

  double best(std::size_t j, std::size_t m) const { return cells_[index(j, m)]; }
  std::span<double> layer(std::size_t j) { return {cells_.data() + index(j, 0), n_ + 1}; }
  std::span<const double> layer(std::size_t j) const {
    return {cells_.data() + index(j, 0), n_ + 1};
  }

 private:
  std::size_t index(std::size_t j, std::size_t m) const noexcept { return (j - 1) * (n_ + 1) + m; }

  std::size_t n_;
  std::size_t j_max_;
  std::vector<double> cells_;
};

namespace kernels {

/// Fills cur[m] = min_{m < t <= n-j+1} cost(m, t) + prev[t] for m in
/// [0, m_end), where prev is layer j - 1. The serial and OpenMP variants
/// evaluate every cell with the same instruction sequence, so their results
/// are bitwise identical.
void dp_layer_serial(const CostTable& table, std::span<const double> prev, std::span<double> cur,
                     std::size_t j, std::size_t m_end);
void dp_layer_parallel(const CostTable& table, std::span<const double> prev, std::span<double> cur,
                       std::size_t j, std::size_t m_end);

/// best(1, m) = cost(m, n) for every m < n.
void dp_first_layer(const CostTable& table, std::span<double> cur);

}  // namespace kernels

/// Runs the DP up to j_max partitions. With `full_top_layer` the last layer is
/// filled for every feasible m, otherwise only for m = 0.
DpTable run_dp(const CostTable& table, std::size_t j_max, bool parallel, bool full_top_layer = false);

/// Globally optimal k-partitioning. Among optima within the tie slack the
/// lexicographically smallest cut vector wins.
SolveResult optimal_partition(const DataSeries& series, std::size_t k, Objective objective,
                              const SolveOptions& options = {});
SolveResult optimal_partition(const DataSeries& series, const CostTable& table, std::size_t k,
                              bool parallel = true);

/// C(n-1, k-1), or nullopt when it does not fit in 64 bits.
std::optional<std::uint64_t> partition_count(std::size_t n, std::size_t k);

/// Exhaustive search using direct two-pass interval costs (no CostTable).
SolveResult brute_force_partition(const DataSeries& series, std::size_t k, Objective objective,
                                  std::uint64_t cap = kEnumerationCap);

struct CurvePoint {
  std::size_t k = 0;
  double cost = 0.0;
};

/// Optimal cost for every k in 1..k_max from a single DP pass.
std::vector<CurvePoint> cost_curve(const DataSeries& series, std::size_t k_max, Objective objective,
                                   const SolveOptions& options = {});

/// Fills means, per-partition costs, cut points and tie flags for a chosen
/// partitioning. Costs come from direct summation.
SolveResult describe(const DataSeries& series, Partitioning partitioning, Objective objective,
                     SolverKind solver, double total_cost);

}  // namespace idisc

namespace idisc {

struct OracleMismatch {
  std::size_t trial = 0;
  Objective objective = Objective::lsqm;
  std::size_t k = 0;
  double dp_cost = 0.0;
  double brute_cost = 0.0;
  std::vector<std::size_t> dp_cuts;
  std::vector<std::size_t> brute_cuts;
};

struct OracleCheckReport {
  std::size_t trials = 0;
  std::size_t comparisons = 0;
  std::vector<OracleMismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
};

/// True when the two costs agree within kTieTolerance relative.
bool costs_agree(double a, double b) noexcept;

/// Compares optimal_partition with brute_force_partition on `trials` random
/// series of n points (x = 1..n, y uniform on [0, 100]) for every k in
/// 1..k_max and both objectives.
OracleCheckReport oracle_check(std::size_t n, std::size_t k_max, std::size_t trials,
                               std::uint64_t seed, bool parallel = true);

}  // namespace idisc
