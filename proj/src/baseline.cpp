#include "idisc/baseline.hpp"

#include <string>

#include "idisc/error.hpp"

namespace idisc {

std::string_view to_string(BinMethod method) noexcept {
  return method == BinMethod::equal_width ? "equal-width" : "equal-frequency";
}

BinMethod parse_bin_method(std::string_view text) {
  if (text == "equal-width" || text == "equal_width") return BinMethod::equal_width;
  if (text == "equal-frequency" || text == "equal_frequency") return BinMethod::equal_frequency;
  throw Error(ErrorCode::bad_spec, "unknown binning method '" + std::string(text) + "'");
}

BinSpec equal_width(const DataSeries& series, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::k_zero, "k must be at least 1");
  const double lo = series.xs().front();
  const double hi = series.xs().back();
  BinSpec spec{BinMethod::equal_width, k, {}, {}, {}};
  spec.edges.reserve(k - 1);
  for (std::size_t j = 1; j < k; ++j) {
    spec.edges.push_back(lo + static_cast<double>(j) * (hi - lo) / static_cast<double>(k));
  }
  return spec;
}

BinSpec equal_frequency(const DataSeries& series, std::size_t k) {
  const std::size_t n = series.size();
  if (k < 1) throw Error(ErrorCode::k_zero, "k must be at least 1");
  if (k > n) {
    throw Error(ErrorCode::k_too_large,
                "k = " + std::to_string(k) + " exceeds the number of points " + std::to_string(n));
  }
  BinSpec spec{BinMethod::equal_frequency, k, {}, {}, {}};
  for (std::size_t j = 1; j < k; ++j) spec.cut_indices.push_back(j * n / k);
  spec.edges = cuts_to_x(series, Partitioning(n, spec.cut_indices)).values;
  spec.tie_split = tie_split_flags(series, spec.cut_indices);
  return spec;
}

}  // namespace idisc
