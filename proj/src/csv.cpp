#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "idisc/error.hpp"
#include "idisc/io.hpp"

namespace idisc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::size_t> parse_index(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::size_t resolve_column(std::string_view selector, const std::vector<std::string>* header) {
  if (header) {
    for (std::size_t i = 0; i < header->size(); ++i) {
      if (trim((*header)[i]) == selector) return i;
    }
  }
  if (auto index = parse_index(selector)) return *index;
  throw Error(ErrorCode::column_not_found, "no column named '" + std::string(selector) + "'");
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r' && c != '\n') {
      field.push_back(c);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

LoadResult load_csv(std::istream& in, std::string_view x_col, std::string_view y_col,
                    const LoadOptions& options) {
  LoadReport report;
  std::vector<Point> points;
  std::string line;

  // First non-empty line decides the header question.
  std::vector<std::string> first;
  while (std::getline(in, line)) {
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!trim(line).empty()) {
      first = split_csv_line(line);
      break;
    }
  }
  if (first.empty()) throw Error(ErrorCode::too_few_points, "input holds no rows");

  const bool named = !parse_index(x_col) || !parse_index(y_col);
  bool header = named;
  if (!header) {
    const std::size_t xi = *parse_index(x_col);
    const std::size_t yi = *parse_index(y_col);
    header = xi >= first.size() || yi >= first.size() || !parse_number(first[xi]) ||
             !parse_number(first[yi]);
    // A short first row with numeric content is data, not a header.
    if (xi >= first.size() || yi >= first.size()) {
      bool any_text = false;
      for (const auto& f : first) any_text = any_text || !parse_number(f);
      header = any_text;
    }
  }
  report.header = header;
  report.x_column = resolve_column(x_col, header ? &first : nullptr);
  report.y_column = resolve_column(y_col, header ? &first : nullptr);

  auto take = [&](const std::vector<std::string>& fields) {
    ++report.rows_read;
    std::optional<double> x, y;
    if (report.x_column < fields.size()) x = parse_number(fields[report.x_column]);
    if (report.y_column < fields.size()) y = parse_number(fields[report.y_column]);
    if (x && y) {
      points.push_back({*x, *y});
    } else {
      ++report.rows_skipped;
    }
  };
  auto room = [&] { return !options.max_rows || report.rows_read < *options.max_rows; };

  if (!header && room()) take(first);
  while (room() && std::getline(in, line)) {
    if (trim(line).empty()) continue;
    take(split_csv_line(line));
  }
  report.rows_used = points.size();
  if (points.size() < 2) {
    throw Error(ErrorCode::too_few_points, std::to_string(points.size()) +
                                               " usable rows after skipping " +
                                               std::to_string(report.rows_skipped));
  }
  return {DataSeries::canonicalize(points), report};
}

LoadResult load_csv(const std::filesystem::path& path, std::string_view x_col,
                    std::string_view y_col, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::file_not_found, "cannot open '" + path.string() + "'");
  return load_csv(in, x_col, y_col, options);
}

void write_series_csv(const DataSeries& series, std::ostream& out) {
  out << "x,y\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < series.size(); ++i) out << series.x(i) << ',' << series.y(i) << '\n';
}

}  // namespace idisc
