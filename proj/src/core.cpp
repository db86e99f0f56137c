#include "idisc/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <string>

#include "idisc/error.hpp"

namespace idisc {

ErrorClass error_class(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::k_zero:
      return ErrorClass::usage;
    case ErrorCode::k_too_large:
    case ErrorCode::enumeration_too_large:
      return ErrorClass::capacity;
    default:
      return ErrorClass::data;
  }
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::too_few_points: return "TooFewPoints";
    case ErrorCode::non_finite_value: return "NonFiniteValue";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::bad_interval: return "BadInterval";
    case ErrorCode::bad_partitioning: return "BadPartitioning";
    case ErrorCode::k_zero: return "KZero";
    case ErrorCode::k_too_large: return "KTooLarge";
    case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
    case ErrorCode::out_of_range: return "OutOfRange";
    case ErrorCode::file_not_found: return "FileNotFound";
    case ErrorCode::column_not_found: return "ColumnNotFound";
    case ErrorCode::bad_spec: return "BadSpec";
    case ErrorCode::write_failed: return "WriteFailed";
    case ErrorCode::parse_failed: return "ParseFailed";
  }
  return "Unknown";
}

DataSeries DataSeries::canonicalize(std::span<const Point> raw) {
  if (raw.size() < 2) {
    throw Error(ErrorCode::too_few_points,
                "need at least 2 points, got " + std::to_string(raw.size()));
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i].x) || !std::isfinite(raw[i].y)) {
      throw Error(ErrorCode::non_finite_value, "row " + std::to_string(i) + " is not finite");
    }
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // stable_sort keeps input position as the final tie-breaker
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].x != raw[b].x) return raw[a].x < raw[b].x;
    return raw[a].y < raw[b].y;
  });

  std::vector<double> xs(raw.size());
  std::vector<double> ys(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    xs[i] = raw[order[i]].x;
    ys[i] = raw[order[i]].y;
  }
  return DataSeries(std::move(xs), std::move(ys));
}

std::vector<Point> DataSeries::points() const {
  std::vector<Point> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = {xs_[i], ys_[i]};
  return out;
}

Partitioning::Partitioning(std::size_t n, std::vector<std::size_t> cuts)
    : n_(n), cuts_(std::move(cuts)) {
  if (n_ == 0) throw Error(ErrorCode::bad_partitioning, "n must be positive");
  std::size_t prev = 0;
  for (std::size_t c : cuts_) {
    if (c <= prev || c >= n_) {
      throw Error(ErrorCode::bad_partitioning,
                  "cut " + std::to_string(c) + " breaks 0 < c_1 < ... < n = " + std::to_string(n_));
    }
    prev = c;
  }
}

IndexRange Partitioning::range(std::size_t j) const {
  const std::size_t lo = j == 0 ? 0 : cuts_[j - 1];
  const std::size_t hi = j == cuts_.size() ? n_ : cuts_[j];
  return {lo, hi};
}

std::vector<IndexRange> Partitioning::ranges() const {
  std::vector<IndexRange> out;
  out.reserve(k());
  for (std::size_t j = 0; j < k(); ++j) out.push_back(range(j));
  return out;
}

std::string_view to_string(Objective objective) noexcept {
  return objective == Objective::lsqm ? "lsqm" : "ladm";
}

Objective parse_objective(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lsqm") return Objective::lsqm;
  if (lower == "ladm") return Objective::ladm;
  throw Error(ErrorCode::bad_spec, "unknown objective '" + std::string(text) + "'");
}

std::string_view to_string(SolverKind solver) noexcept {
  return solver == SolverKind::dp ? "dp" : "brute";
}

CutPoints cuts_to_x(const DataSeries& series, const Partitioning& partitioning) {
  if (partitioning.n() != series.size()) {
    throw Error(ErrorCode::length_mismatch,
                "partitioning covers " + std::to_string(partitioning.n()) + " points, series has " +
                    std::to_string(series.size()));
  }
  CutPoints out;
  out.values.reserve(partitioning.cuts().size());
  for (std::size_t c : partitioning.cuts()) out.values.push_back(series.x(c - 1));
  return out;
}

std::vector<bool> tie_split_flags(const DataSeries& series, std::span<const std::size_t> cuts) {
  std::vector<bool> flags;
  flags.reserve(cuts.size());
  for (std::size_t c : cuts) {
    flags.push_back(c >= 1 && c < series.size() && series.x(c - 1) == series.x(c));
  }
  return flags;
}

}  // namespace idisc
