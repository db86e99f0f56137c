#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idisc/baseline.hpp"
#include "idisc/agree.hpp"
#include "idisc/core.hpp"
#include "idisc/solver.hpp"

#include "json.hpp"

namespace idisc {

// ---------------------------------------------------------------------------
// CSV input
// ---------------------------------------------------------------------------

struct LoadOptions {
  /// Only the first `max_rows` data rows are considered (header excluded).
  std::optional<std::size_t> max_rows;
};

struct LoadReport {
  bool header = false;
  std::size_t rows_read = 0;     // data rows considered
  std::size_t rows_skipped = 0;  // missing or unparseable selected fields
  std::size_t rows_used = 0;
  std::size_t x_column = 0;
  std::size_t y_column = 0;
};

struct LoadResult {
  DataSeries series;
  LoadReport report;
};

/// Comma separated, '.' decimal point, optional header. A selector is matched
/// against header names first and otherwise read as a 0-based column index.
/// The first row is a header when a selector names a column or when either
/// selected field fails to parse as a number.
LoadResult load_csv(const std::filesystem::path& path, std::string_view x_col,
                    std::string_view y_col, const LoadOptions& options = {});
LoadResult load_csv(std::istream& in, std::string_view x_col, std::string_view y_col,
                    const LoadOptions& options = {});

/// Splits one CSV record; double quotes may wrap fields containing commas.
std::vector<std::string> split_csv_line(std::string_view line);

/// Writes "x,y" rows with round-trip precision.
void write_series_csv(const DataSeries& series, std::ostream& out);

// ---------------------------------------------------------------------------
// Synthetic data
// ---------------------------------------------------------------------------

enum class SynthFamily { step, linear, mixed, constant_noise };

std::string_view to_string(SynthFamily family) noexcept;
SynthFamily parse_synth_family(std::string_view text);

/// One piece of a mixed series: `length` points of slope * x + intercept.
struct SynthSegment {
  std::size_t length = 0;
  double slope = 0.0;
  double intercept = 0.0;
};

struct SynthSpec {
  SynthFamily family = SynthFamily::step;
  std::size_t n = 0;
  /// step: block levels; constant_noise: levels[0] is the constant.
  std::vector<double> levels;
  /// step: optional explicit block lengths (must sum to n); equal blocks otherwise.
  std::vector<std::size_t> block_lengths;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<SynthSegment> segments;
  double noise_sd = 0.0;
  std::uint64_t seed = 0;
};

/// x = 1..n with Gaussian noise of sd noise_sd on y. Throws bad_spec.
DataSeries generate(const SynthSpec& spec);

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

enum class OutputFormat { json, csv };

OutputFormat parse_output_format(std::string_view text);

/// Rounds to 12 significant digits, the precision of every written number.
double round_sig12(double v);

nlohmann::json to_json(const SolveResult& result);
void write_result(const SolveResult& result, OutputFormat format, std::ostream& out);
/// Throws write_failed when the file cannot be written.
void write_result(const SolveResult& result, OutputFormat format, const std::filesystem::path& path);

/// Parsed form of a written result (numbers carry 12 significant digits).
struct ResultRecord {
  std::string objective;
  std::string solver;
  std::size_t k = 0;
  std::vector<std::size_t> cut_indices;
  std::vector<double> cut_points;
  double total_cost = 0.0;
  std::vector<PartitionSummary> partitions;
  std::vector<bool> tie_split;
};

ResultRecord read_result(std::istream& in, OutputFormat format);

nlohmann::json to_json(const std::vector<CurvePoint>& curve, Objective objective);
nlohmann::json to_json(const BinSpec& spec);
nlohmann::json to_json(const AgreementReport& report);

}  // namespace idisc
