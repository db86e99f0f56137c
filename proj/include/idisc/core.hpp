#pragma once

// Domain types shared by every stage of the discretizer.
//
// Indices follow the half-open convention used throughout the library: a
// partition is written (lo, hi] over 1-based point positions, so the first
// partition of a k-partitioning always starts at lo = 0 and the last one ends
// at hi = n. Internally the data vectors are 0-based; point p (1-based) lives
// at offset p - 1.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace idisc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Observations sorted by x (ties by y, then by input position). Immutable.
class DataSeries {
 public:
  /// Sorts into canonical order. Throws too_few_points / non_finite_value.
  static DataSeries canonicalize(std::span<const Point> raw);

  std::size_t size() const noexcept { return xs_.size(); }
  std::span<const double> xs() const noexcept { return xs_; }
  std::span<const double> ys() const noexcept { return ys_; }
  double x(std::size_t i) const { return xs_[i]; }
  double y(std::size_t i) const { return ys_[i]; }
  std::vector<Point> points() const;

  friend bool operator==(const DataSeries&, const DataSeries&) = default;

 private:
  DataSeries(std::vector<double> xs, std::vector<double> ys)
      : xs_(std::move(xs)), ys_(std::move(ys)) {}

  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// Half-open index range (lo, hi] over 1-based point positions.
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t length() const noexcept { return hi - lo; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// An order-preserving split of n points into k non-empty partitions.
class Partitioning {
 public:
  /// `cuts` holds the k-1 boundaries; cut c means "partition ends after point c".
  /// Throws bad_partitioning unless 0 < c_1 < ... < c_{k-1} < n.
  Partitioning(std::size_t n, std::vector<std::size_t> cuts);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return cuts_.size() + 1; }
  const std::vector<std::size_t>& cuts() const noexcept { return cuts_; }

  IndexRange range(std::size_t j) const;
  std::vector<IndexRange> ranges() const;

  friend bool operator==(const Partitioning&, const Partitioning&) = default;

 private:
  std::size_t n_;
  std::vector<std::size_t> cuts_;
};

struct CutPoints {
  std::vector<double> values;
  friend bool operator==(const CutPoints&, const CutPoints&) = default;
};

enum class Objective { lsqm, ladm };

std::string_view to_string(Objective objective) noexcept;
/// Accepts "lsqm" / "ladm" in any case. Throws bad_spec otherwise.
Objective parse_objective(std::string_view text);

enum class SolverKind { dp, brute };

std::string_view to_string(SolverKind solver) noexcept;

struct PartitionSummary {
  IndexRange range;
  double mean = 0.0;
  double cost = 0.0;
};

struct SolveResult {
  Objective objective = Objective::lsqm;
  SolverKind solver = SolverKind::dp;
  Partitioning partitioning{1, {}};
  CutPoints cut_points;
  double total_cost = 0.0;
  std::vector<PartitionSummary> per_partition;
  /// One flag per cut: true when the cut separates two points sharing an x.
  std::vector<bool> tie_split;
};

/// x of the last point of every partition except the final one.
CutPoints cuts_to_x(const DataSeries& series, const Partitioning& partitioning);

/// For each cut c, whether x_c == x_{c+1}.
std::vector<bool> tie_split_flags(const DataSeries& series, std::span<const std::size_t> cuts);

}  // namespace idisc
