#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "idisc/error.hpp"
#include "idisc/io.hpp"

namespace idisc {
namespace {

using nlohmann::json;

constexpr const char* kCsvHeader =
    "kind,partition,lo,hi,mean,cost,cut_index,cut_point,tie_split,objective,solver";

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double parse_double(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Error(ErrorCode::parse_failed, "bad number '" + text + "'");
  }
  return v;
}

std::size_t parse_size(const std::string& text) {
  char* end = nullptr;
  const unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Error(ErrorCode::parse_failed, "bad index '" + text + "'");
  }
  return static_cast<std::size_t>(v);
}

json rounded(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(round_sig12(v));
  return out;
}

void write_csv(const SolveResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  const auto& cuts = result.partitioning.cuts();
  for (std::size_t j = 0; j < result.per_partition.size(); ++j) {
    const auto& p = result.per_partition[j];
    out << "partition," << j + 1 << ',' << p.range.lo << ',' << p.range.hi << ',' << fmt12(p.mean)
        << ',' << fmt12(p.cost) << ',';
    if (j < cuts.size()) {
      out << cuts[j] << ',' << fmt12(result.cut_points.values[j]) << ','
          << (result.tie_split[j] ? "true" : "false");
    } else {
      out << ",,";
    }
    out << ",,\n";
  }
  out << "summary," << result.partitioning.k() << ",0," << result.partitioning.n() << ",,"
      << fmt12(result.total_cost) << ",,,," << to_string(result.objective) << ','
      << to_string(result.solver) << '\n';
}

ResultRecord read_csv(std::istream& in) {
  ResultRecord record;
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw Error(ErrorCode::parse_failed, "missing result CSV header");
  }
  bool summary = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw Error(ErrorCode::parse_failed, "expected 11 fields: " + line);
    if (f[0] == "partition") {
      record.partitions.push_back(
          {{parse_size(f[2]), parse_size(f[3])}, parse_double(f[4]), parse_double(f[5])});
      if (!f[6].empty()) {
        record.cut_indices.push_back(parse_size(f[6]));
        record.cut_points.push_back(parse_double(f[7]));
        record.tie_split.push_back(f[8] == "true");
      }
    } else if (f[0] == "summary") {
      record.k = parse_size(f[1]);
      record.total_cost = parse_double(f[5]);
      record.objective = f[9];
      record.solver = f[10];
      summary = true;
    } else {
      throw Error(ErrorCode::parse_failed, "unknown row kind '" + f[0] + "'");
    }
  }
  if (!summary) throw Error(ErrorCode::parse_failed, "missing summary row");
  return record;
}

ResultRecord read_json(std::istream& in) {
  ResultRecord record;
  try {
    const json j = json::parse(in);
    record.objective = j.at("objective").get<std::string>();
    record.solver = j.at("solver").get<std::string>();
    record.k = j.at("k").get<std::size_t>();
    record.cut_indices = j.at("cut_indices").get<std::vector<std::size_t>>();
    record.cut_points = j.at("cut_points").get<std::vector<double>>();
    record.total_cost = j.at("total_cost").get<double>();
    record.tie_split = j.at("tie_split_flags").get<std::vector<bool>>();
    for (const auto& p : j.at("partitions")) {
      record.partitions.push_back({{p.at("lo").get<std::size_t>(), p.at("hi").get<std::size_t>()},
                                   p.at("mean").get<double>(),
                                   p.at("cost").get<double>()});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse_failed, e.what());
  }
  return record;
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw Error(ErrorCode::bad_spec, "unknown output format '" + std::string(text) + "'");
}

double round_sig12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

json to_json(const SolveResult& result) {
  json partitions = json::array();
  for (const auto& p : result.per_partition) {
    partitions.push_back({{"lo", p.range.lo},
                          {"hi", p.range.hi},
                          {"mean", round_sig12(p.mean)},
                          {"cost", round_sig12(p.cost)}});
  }
  return {{"objective", to_string(result.objective)},
          {"k", result.partitioning.k()},
          {"n", result.partitioning.n()},
          {"cut_indices", result.partitioning.cuts()},
          {"cut_points", rounded(result.cut_points.values)},
          {"total_cost", round_sig12(result.total_cost)},
          {"partitions", std::move(partitions)},
          {"solver", to_string(result.solver)},
          {"tie_split_flags", result.tie_split}};
}

void write_result(const SolveResult& result, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(result).dump(2) << '\n';
  } else {
    write_csv(result, out);
  }
  if (!out) throw Error(ErrorCode::write_failed, "stream rejected the result");
}

void write_result(const SolveResult& result, OutputFormat format,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::write_failed, "cannot open '" + path.string() + "' for writing");
  write_result(result, format, out);
  out.close();
  if (!out) throw Error(ErrorCode::write_failed, "failed writing '" + path.string() + "'");
}

ResultRecord read_result(std::istream& in, OutputFormat format) {
  return format == OutputFormat::json ? read_json(in) : read_csv(in);
}

json to_json(const std::vector<CurvePoint>& curve, Objective objective) {
  json points = json::array();
  for (const auto& p : curve) points.push_back({{"k", p.k}, {"cost", round_sig12(p.cost)}});
  return {{"objective", to_string(objective)}, {"curve", std::move(points)}};
}

json to_json(const BinSpec& spec) {
  json out{{"method", to_string(spec.method)}, {"k", spec.k}, {"edges", rounded(spec.edges)}};
  if (spec.method == BinMethod::equal_frequency) {
    out["cut_indices"] = spec.cut_indices;
    out["tie_split_flags"] = spec.tie_split;
  }
  return out;
}

json to_json(const AgreementReport& report) {
  json pairs = json::array();
  for (const auto& m : report.matched) {
    pairs.push_back({{"a", round_sig12(m.a)}, {"b", round_sig12(m.b)}, {"distance", round_sig12(m.distance)}});
  }
  return {{"score", round_sig12(report.score)},
          {"band", to_string(classify_match(report.score))},
          {"tolerance", report.tolerance},
          {"matched_pairs", std::move(pairs)},
          {"unmatched_a", rounded(report.unmatched_a)},
          {"unmatched_b", rounded(report.unmatched_b)}};
}

}  // namespace idisc
