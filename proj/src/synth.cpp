#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <string>

#include "idisc/error.hpp"
#include "idisc/io.hpp"

namespace idisc {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::bad_spec, what);
}

}  // namespace

std::string_view to_string(SynthFamily family) noexcept {
  switch (family) {
    case SynthFamily::step: return "step";
    case SynthFamily::linear: return "linear";
    case SynthFamily::mixed: return "mixed";
    case SynthFamily::constant_noise: return "constant_noise";
  }
  return "step";
}

SynthFamily parse_synth_family(std::string_view text) {
  if (text == "step") return SynthFamily::step;
  if (text == "linear") return SynthFamily::linear;
  if (text == "mixed") return SynthFamily::mixed;
  if (text == "constant_noise" || text == "constant-noise") return SynthFamily::constant_noise;
  throw Error(ErrorCode::bad_spec, "unknown family '" + std::string(text) + "'");
}

DataSeries generate(const SynthSpec& spec) {
  require(std::isfinite(spec.noise_sd) && spec.noise_sd >= 0.0, "noise_sd must be finite and >= 0");
  require(std::isfinite(spec.slope) && std::isfinite(spec.intercept), "slope/intercept must be finite");
  for (double l : spec.levels) require(std::isfinite(l), "levels must be finite");

  std::size_t n = spec.n;
  if (spec.family == SynthFamily::mixed) {
    require(!spec.segments.empty(), "mixed family needs at least one segment");
    std::size_t total = 0;
    for (const auto& s : spec.segments) {
      require(s.length > 0, "segment length must be positive");
      require(std::isfinite(s.slope) && std::isfinite(s.intercept), "segment parameters must be finite");
      total += s.length;
    }
    require(n == 0 || n == total, "n must equal the sum of segment lengths");
    n = total;
  }
  require(n >= 2, "n must be at least 2");

  std::vector<double> clean(n);
  switch (spec.family) {
    case SynthFamily::step: {
      std::vector<double> distinct = spec.levels;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      require(distinct.size() >= 2, "step family needs at least 2 distinct levels");
      const std::size_t blocks = spec.levels.size();
      require(blocks <= n, "more levels than points");
      std::vector<std::size_t> bounds{0};
      if (spec.block_lengths.empty()) {
        for (std::size_t j = 1; j <= blocks; ++j) bounds.push_back(j * n / blocks);
      } else {
        require(spec.block_lengths.size() == blocks, "one block length per level");
        for (std::size_t len : spec.block_lengths) {
          require(len > 0, "block lengths must be positive");
          bounds.push_back(bounds.back() + len);
        }
        require(bounds.back() == n, "block lengths must sum to n");
      }
      for (std::size_t j = 0; j < blocks; ++j) {
        for (std::size_t i = bounds[j]; i < bounds[j + 1]; ++i) clean[i] = spec.levels[j];
      }
      break;
    }
    case SynthFamily::linear:
      for (std::size_t i = 0; i < n; ++i) {
        clean[i] = spec.slope * static_cast<double>(i + 1) + spec.intercept;
      }
      break;
    case SynthFamily::mixed: {
      std::size_t i = 0;
      for (const auto& s : spec.segments) {
        for (std::size_t r = 0; r < s.length; ++r, ++i) {
          clean[i] = s.slope * static_cast<double>(i + 1) + s.intercept;
        }
      }
      break;
    }
    case SynthFamily::constant_noise:
      require(spec.levels.size() <= 1, "constant_noise takes at most one level");
      std::fill(clean.begin(), clean.end(), spec.levels.empty() ? spec.intercept : spec.levels[0]);
      break;
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<Point> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double e = spec.noise_sd > 0.0 ? spec.noise_sd * noise(rng) : 0.0;
    points[i] = {static_cast<double>(i + 1), clean[i] + e};
  }
  return DataSeries::canonicalize(points);
}

}  // namespace idisc
