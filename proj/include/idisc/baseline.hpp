#pragma once

// Unsupervised reference discretizers. Both look at x only.

#include <cstddef>
#include <string_view>
#include <vector>

#include "idisc/core.hpp"

namespace idisc {

enum class BinMethod { equal_width, equal_frequency };

std::string_view to_string(BinMethod method) noexcept;
/// Accepts "equal-width" / "equal-frequency" (underscores also accepted).
BinMethod parse_bin_method(std::string_view text);

struct BinSpec {
  BinMethod method = BinMethod::equal_width;
  std::size_t k = 1;
  std::vector<double> edges;
  /// Equal-frequency only: index boundaries and whether each splits an x tie.
  std::vector<std::size_t> cut_indices;
  std::vector<bool> tie_split;
};

/// edges[j] = x_min + (j + 1) (x_max - x_min) / k. Throws k_zero.
BinSpec equal_width(const DataSeries& series, std::size_t k);

/// Bin j holds positions (floor(j n / k), floor((j + 1) n / k)]; edges are
/// the x of each bin's last point. Throws k_zero / k_too_large.
BinSpec equal_frequency(const DataSeries& series, std::size_t k);

}  // namespace idisc
