#pragma once

// Interval costs for the two impact measures.
//
// For an index interval (a, b] with mean mu = sum(y_{a+1..b}) / (b - a):
//   LSQM cost = sum (y - mu)^2
//   LADM cost = sum |y - mu|        (deviation around the mean, not the median)

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idisc/core.hpp"

namespace idisc {

/// Direct evaluation, O(b - a). Throws bad_interval unless 0 <= a < b <= n.
double interval_mean(const DataSeries& series, std::size_t a, std::size_t b);
double interval_cost_sq(const DataSeries& series, std::size_t a, std::size_t b);
double interval_cost_abs(const DataSeries& series, std::size_t a, std::size_t b);
double interval_cost(const DataSeries& series, std::size_t a, std::size_t b, Objective objective);

struct CostTableOptions {
  /// Upper bound on the dense LADM triangle (n(n+1)/2 doubles). Larger inputs
  /// fall back to recomputing rows on demand.
  std::size_t dense_budget_bytes = std::size_t{1} << 30;
  /// Build the dense LADM triangle with OpenMP.
  bool parallel = true;
};

/// Precomputed interval cost oracle for one series and objective.
///
/// LSQM queries are O(1) from compensated prefix sums of the centred values.
/// LADM rows are produced by sweeping a Fenwick tree over value ranks, O(log n)
/// per interval; the full triangle is cached when it fits the memory budget.
/// Intervals on which y is constant always report exactly 0.
///
/// Immutable after construction. `row` needs caller-owned scratch, so
/// concurrent use from several threads is safe with one Scratch per thread.
class CostTable {
 public:
  struct Scratch {
    std::vector<double> values;
    std::vector<double> fenwick_sum;
    std::vector<std::uint32_t> fenwick_count;
  };

  CostTable(const DataSeries& series, Objective objective, CostTableOptions options = {});

  Objective objective() const noexcept { return objective_; }
  std::size_t n() const noexcept { return n_; }
  bool dense() const noexcept { return !triangle_.empty(); }

  double query(std::size_t a, std::size_t b) const;
  double mean(std::size_t a, std::size_t b) const;

  /// Costs of (a, b] for b = a+1 .. n, in that order. The span points either
  /// into the cached triangle or into `scratch.values`.
  std::span<const double> row(std::size_t a, Scratch& scratch) const;

  /// Bytes the dense LADM triangle would need for n points.
  static std::size_t triangle_bytes(std::size_t n) noexcept;

 private:
  void check(std::size_t a, std::size_t b) const;
  bool constant_on(std::size_t a, std::size_t b) const noexcept {
    return run_start_[b - 1] <= a;
  }
  double centred_sum(std::size_t a, std::size_t b) const noexcept;
  double centred_sq_sum(std::size_t a, std::size_t b) const noexcept;
  double lsqm_cost(std::size_t a, std::size_t b) const noexcept;
  double direct_abs_cost(std::size_t a, std::size_t b) const noexcept;
  void sweep_abs_row(std::size_t a, std::span<double> out, Scratch& scratch) const;
  std::size_t triangle_offset(std::size_t a) const noexcept {
    return a * n_ - a * (a - 1) / 2;
  }

  Objective objective_;
  std::size_t n_;
  double shift_ = 0.0;
  std::vector<double> y_;          // original values (for exact constant means)
  std::vector<double> centred_;    // y - shift
  std::vector<std::size_t> run_start_;
  // Compensated prefix sums: value = hi[i] + lo[i].
  std::vector<double> sum_hi_, sum_lo_;
  std::vector<double> sq_hi_, sq_lo_;
  // LADM support.
  std::vector<double> distinct_;              // sorted distinct centred values
  std::vector<std::uint32_t> rank_;           // 1-based rank of each point in distinct_
  std::vector<double> triangle_;
};

}  // namespace idisc
