#pragma once

// Agreement between two cut-point sets, e.g. solver output against cut-points
// read off by a person.

#include <string_view>
#include <vector>

#include "idisc/core.hpp"

namespace idisc {

inline constexpr double kDefaultMatchTolerance = 2.0;

struct MatchedPair {
  double a = 0.0;
  double b = 0.0;
  double distance = 0.0;
};

struct AgreementReport {
  double score = 0.0;
  double tolerance = 0.0;
  std::vector<MatchedPair> matched;
  std::vector<double> unmatched_a;
  std::vector<double> unmatched_b;
};

/// Maximum one-to-one matching of the sorted cuts with |a - b| <= tolerance;
/// among maximum matchings the one with the smallest total distance is kept.
/// score = |matched| / max(|a|, |b|); two empty sets score 1.
AgreementReport agreement_score(const CutPoints& a, const CutPoints& b,
                                double tolerance = kDefaultMatchTolerance);

enum class MatchBand { no_match, low, medium, high, very_high };

std::string_view to_string(MatchBand band) noexcept;

/// Percentage bands: 0 no match, (0, 40) low, [40, 60) medium, [60, 80) high,
/// [80, 100] very high. Throws out_of_range outside [0, 1].
MatchBand classify_match(double score);

}  // namespace idisc
