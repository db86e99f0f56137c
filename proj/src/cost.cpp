#include "idisc/cost.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "idisc/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace idisc {
namespace {

void check_interval(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= b || b > n) {
    throw Error(ErrorCode::bad_interval, "(" + std::to_string(a) + ", " + std::to_string(b) +
                                             "] is not inside (0, " + std::to_string(n) + "]");
  }
}

// Neumaier-compensated running sum.
struct CompensatedSum {
  double sum = 0.0;
  double err = 0.0;

  void add(double v) noexcept {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      err += (sum - t) + v;
    } else {
      err += (v - t) + sum;
    }
    sum = t;
  }
  double value() const noexcept { return sum + err; }
};

double direct_mean(std::span<const double> ys) {
  CompensatedSum s;
  for (double v : ys) s.add(v);
  return s.value() / static_cast<double>(ys.size());
}

void fenwick_add(CostTable::Scratch& s, std::size_t pos, double value) noexcept {
  const std::size_t size = s.fenwick_count.size();
  for (; pos < size; pos += pos & (~pos + 1)) {
    s.fenwick_count[pos] += 1;
    s.fenwick_sum[pos] += value;
  }
}

// Count and sum of inserted values with rank <= pos.
std::pair<std::uint32_t, double> fenwick_prefix(const CostTable::Scratch& s, std::size_t pos) noexcept {
  std::uint32_t count = 0;
  double sum = 0.0;
  for (; pos > 0; pos -= pos & (~pos + 1)) {
    count += s.fenwick_count[pos];
    sum += s.fenwick_sum[pos];
  }
  return {count, sum};
}

}  // namespace

double interval_mean(const DataSeries& series, std::size_t a, std::size_t b) {
  check_interval(series.size(), a, b);
  return direct_mean(series.ys().subspan(a, b - a));
}

double interval_cost_sq(const DataSeries& series, std::size_t a, std::size_t b) {
  check_interval(series.size(), a, b);
  const auto ys = series.ys().subspan(a, b - a);
  const double mu = direct_mean(ys);
  CompensatedSum s;
  for (double v : ys) s.add((v - mu) * (v - mu));
  return s.value();
}

double interval_cost_abs(const DataSeries& series, std::size_t a, std::size_t b) {
  check_interval(series.size(), a, b);
  const auto ys = series.ys().subspan(a, b - a);
  const double mu = direct_mean(ys);
  CompensatedSum s;
  for (double v : ys) s.add(std::abs(v - mu));
  return s.value();
}

double interval_cost(const DataSeries& series, std::size_t a, std::size_t b, Objective objective) {
  return objective == Objective::lsqm ? interval_cost_sq(series, a, b)
                                      : interval_cost_abs(series, a, b);
}

CostTable::CostTable(const DataSeries& series, Objective objective, CostTableOptions options)
    : objective_(objective), n_(series.size()) {
  const auto ys = series.ys();
  y_.assign(ys.begin(), ys.end());
  shift_ = direct_mean(ys);

  centred_.resize(n_);
  run_start_.resize(n_);
  sum_hi_.assign(n_ + 1, 0.0);
  sum_lo_.assign(n_ + 1, 0.0);
  sq_hi_.assign(n_ + 1, 0.0);
  sq_lo_.assign(n_ + 1, 0.0);

  CompensatedSum s, q;
  for (std::size_t i = 0; i < n_; ++i) {
    const double c = ys[i] - shift_;
    centred_[i] = c;
    run_start_[i] = (i > 0 && ys[i] == ys[i - 1]) ? run_start_[i - 1] : i;
    s.add(c);
    q.add(c * c);
    sum_hi_[i + 1] = s.sum;
    sum_lo_[i + 1] = s.err;
    sq_hi_[i + 1] = q.sum;
    sq_lo_[i + 1] = q.err;
  }

  if (objective_ != Objective::ladm) return;

  distinct_ = centred_;
  std::sort(distinct_.begin(), distinct_.end());
  distinct_.erase(std::unique(distinct_.begin(), distinct_.end()), distinct_.end());
  rank_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto it = std::lower_bound(distinct_.begin(), distinct_.end(), centred_[i]);
    rank_[i] = static_cast<std::uint32_t>(it - distinct_.begin()) + 1;
  }

  if (triangle_bytes(n_) > options.dense_budget_bytes) return;

  triangle_.resize(triangle_offset(n_));
  const auto rows = static_cast<std::ptrdiff_t>(n_);
#pragma omp parallel if (options.parallel)
  {
    Scratch scratch;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t a = 0; a < rows; ++a) {
      const auto row_a = static_cast<std::size_t>(a);
      sweep_abs_row(row_a, std::span<double>(triangle_).subspan(triangle_offset(row_a), n_ - row_a),
                    scratch);
    }
  }
}

std::size_t CostTable::triangle_bytes(std::size_t n) noexcept {
  return n * (n + 1) / 2 * sizeof(double);
}

void CostTable::check(std::size_t a, std::size_t b) const { check_interval(n_, a, b); }

double CostTable::centred_sum(std::size_t a, std::size_t b) const noexcept {
  return (sum_hi_[b] - sum_hi_[a]) + (sum_lo_[b] - sum_lo_[a]);
}

double CostTable::centred_sq_sum(std::size_t a, std::size_t b) const noexcept {
  return (sq_hi_[b] - sq_hi_[a]) + (sq_lo_[b] - sq_lo_[a]);
}

double CostTable::lsqm_cost(std::size_t a, std::size_t b) const noexcept {
  if (constant_on(a, b)) return 0.0;
  const double s = centred_sum(a, b);
  const double cost = centred_sq_sum(a, b) - s * s / static_cast<double>(b - a);
  return cost > 0.0 ? cost : 0.0;
}

double CostTable::direct_abs_cost(std::size_t a, std::size_t b) const noexcept {
  if (constant_on(a, b)) return 0.0;
  const double mu = centred_sum(a, b) / static_cast<double>(b - a);
  double total = 0.0;
  for (std::size_t i = a; i < b; ++i) total += std::abs(centred_[i] - mu);
  return total;
}

double CostTable::query(std::size_t a, std::size_t b) const {
  check(a, b);
  if (objective_ == Objective::lsqm) return lsqm_cost(a, b);
  if (dense()) return triangle_[triangle_offset(a) + (b - a - 1)];
  return direct_abs_cost(a, b);
}

double CostTable::mean(std::size_t a, std::size_t b) const {
  check(a, b);
  if (constant_on(a, b)) return y_[a];
  return shift_ + centred_sum(a, b) / static_cast<double>(b - a);
}

void CostTable::sweep_abs_row(std::size_t a, std::span<double> out, Scratch& scratch) const {
  const std::size_t slots = distinct_.size() + 1;
  scratch.fenwick_count.assign(slots, 0);
  scratch.fenwick_sum.assign(slots, 0.0);

  double total = 0.0;
  for (std::size_t b = a + 1; b <= n_; ++b) {
    const std::size_t i = b - 1;
    fenwick_add(scratch, rank_[i], centred_[i]);
    total += centred_[i];
    if (constant_on(a, b)) {
      out[b - a - 1] = 0.0;
      continue;
    }
    const double len = static_cast<double>(b - a);
    const double mu = centred_sum(a, b) / len;
    const auto le_ranks =
        static_cast<std::size_t>(std::upper_bound(distinct_.begin(), distinct_.end(), mu) - distinct_.begin());
    const auto [le_count, le_sum] = fenwick_prefix(scratch, le_ranks);
    // sum_{y>mu} (y - mu) + sum_{y<=mu} (mu - y)
    const double cost = (total - 2.0 * le_sum) + mu * (2.0 * static_cast<double>(le_count) - len);
    out[b - a - 1] = cost > 0.0 ? cost : 0.0;
  }
}

std::span<const double> CostTable::row(std::size_t a, Scratch& scratch) const {
  check(a, n_);
  const std::size_t len = n_ - a;
  if (objective_ == Objective::ladm && dense()) {
    return std::span<const double>(triangle_).subspan(triangle_offset(a), len);
  }
  scratch.values.resize(len);
  std::span<double> out(scratch.values.data(), len);
  if (objective_ == Objective::lsqm) {
    for (std::size_t b = a + 1; b <= n_; ++b) out[b - a - 1] = lsqm_cost(a, b);
  } else {
    sweep_abs_row(a, out, scratch);
  }
  return out;
}

}  // namespace idisc
