// Layer kernels for the partition DP. The serial version is the reference the
// OpenMP version is tested against.

#include <limits>

#include "idisc/solver.hpp"

namespace idisc::kernels {
namespace {

inline double min_over_splits(const CostTable& table, std::span<const double> prev, std::size_t j,
                              std::size_t m, CostTable::Scratch& scratch) {
  const std::size_t t_last = table.n() - j + 1;
  const auto row = table.row(m, scratch);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t t = m + 1; t <= t_last; ++t) {
    const double v = row[t - m - 1] + prev[t];
    if (v < best) best = v;
  }
  return best;
}

}  // namespace

void dp_first_layer(const CostTable& table, std::span<double> cur) {
  const std::size_t n = table.n();
  for (std::size_t m = 0; m < n; ++m) cur[m] = table.query(m, n);
  cur[n] = std::numeric_limits<double>::infinity();
}

void dp_layer_serial(const CostTable& table, std::span<const double> prev, std::span<double> cur,
                     std::size_t j, std::size_t m_end) {
  CostTable::Scratch scratch;
  for (std::size_t m = 0; m < m_end; ++m) cur[m] = min_over_splits(table, prev, j, m, scratch);
}

void dp_layer_parallel(const CostTable& table, std::span<const double> prev, std::span<double> cur,
                       std::size_t j, std::size_t m_end) {
  const auto end = static_cast<std::ptrdiff_t>(m_end);
#pragma omp parallel
  {
    CostTable::Scratch scratch;
#pragma omp for schedule(dynamic, 32)
    for (std::ptrdiff_t m = 0; m < end; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      cur[mi] = min_over_splits(table, prev, j, mi, scratch);
    }
  }
}

}  // namespace idisc::kernels
