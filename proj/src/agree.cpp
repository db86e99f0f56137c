#include "idisc/agree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "idisc/error.hpp"

namespace idisc {
namespace {

struct Cell {
  std::size_t count = 0;
  double distance = 0.0;

  bool better_than(const Cell& other) const noexcept {
    if (count != other.count) return count > other.count;
    return distance < other.distance;
  }
};

enum class Step : unsigned char { none, pair, skip_a, skip_b };

}  // namespace

AgreementReport agreement_score(const CutPoints& a_in, const CutPoints& b_in, double tolerance) {
  if (!(tolerance >= 0.0)) throw Error(ErrorCode::out_of_range, "tolerance must be >= 0");

  std::vector<double> a = a_in.values;
  std::vector<double> b = b_in.values;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const std::size_t p = a.size();
  const std::size_t q = b.size();

  // Non-crossing matching DP; for points on a line some optimal matching is
  // always non-crossing, so this is exact.
  std::vector<Cell> cell((p + 1) * (q + 1));
  std::vector<Step> step((p + 1) * (q + 1), Step::none);
  auto at = [q](std::size_t i, std::size_t j) { return i * (q + 1) + j; };
  for (std::size_t i = 0; i <= p; ++i) {
    for (std::size_t j = 0; j <= q; ++j) {
      if (i == 0 && j == 0) continue;
      Cell best;
      Step how = Step::none;
      bool have = false;
      auto offer = [&](Cell c, Step s) {
        if (!have || c.better_than(best)) {
          best = c;
          how = s;
          have = true;
        }
      };
      if (i > 0 && j > 0) {
        const double d = std::abs(a[i - 1] - b[j - 1]);
        if (d <= tolerance) {
          const Cell& prev = cell[at(i - 1, j - 1)];
          offer({prev.count + 1, prev.distance + d}, Step::pair);
        }
      }
      if (i > 0) offer(cell[at(i - 1, j)], Step::skip_a);
      if (j > 0) offer(cell[at(i, j - 1)], Step::skip_b);
      cell[at(i, j)] = best;
      step[at(i, j)] = how;
    }
  }

  AgreementReport report;
  report.tolerance = tolerance;
  for (std::size_t i = p, j = q; i > 0 || j > 0;) {
    switch (step[at(i, j)]) {
      case Step::pair:
        report.matched.push_back({a[i - 1], b[j - 1], std::abs(a[i - 1] - b[j - 1])});
        --i;
        --j;
        break;
      case Step::skip_a:
        report.unmatched_a.push_back(a[--i]);
        break;
      case Step::skip_b:
        report.unmatched_b.push_back(b[--j]);
        break;
      case Step::none:
        i = j = 0;
        break;
    }
  }
  std::reverse(report.matched.begin(), report.matched.end());
  std::reverse(report.unmatched_a.begin(), report.unmatched_a.end());
  std::reverse(report.unmatched_b.begin(), report.unmatched_b.end());

  const std::size_t larger = std::max(p, q);
  report.score = larger == 0 ? 1.0
                             : static_cast<double>(report.matched.size()) / static_cast<double>(larger);
  return report;
}

std::string_view to_string(MatchBand band) noexcept {
  switch (band) {
    case MatchBand::no_match: return "No match";
    case MatchBand::low: return "Low";
    case MatchBand::medium: return "Medium";
    case MatchBand::high: return "High";
    case MatchBand::very_high: return "Very High";
  }
  return "No match";
}

MatchBand classify_match(double score) {
  if (!(score >= 0.0 && score <= 1.0)) {
    throw Error(ErrorCode::out_of_range, "score " + std::to_string(score) + " is outside [0, 1]");
  }
  // Snap away representation noise such as 0.57 * 100 = 56.99999999999999.
  const double percent = std::round(score * 100.0 * 1e6) / 1e6;
  if (percent == 0.0) return MatchBand::no_match;
  if (percent < 40.0) return MatchBand::low;
  if (percent < 60.0) return MatchBand::medium;
  if (percent < 80.0) return MatchBand::high;
  return MatchBand::very_high;
}

}  // namespace idisc
