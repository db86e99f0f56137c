#include "idisc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "idisc/error.hpp"
#include "idisc/io.hpp"

namespace idisc {
namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorCode::bad_spec, "'" + part + "' is not a number");
    }
  }
  return values;
}

std::vector<SynthSegment> parse_segments(const std::string& text) {
  std::vector<SynthSegment> segments;
  for (const auto& piece : split(text, ';')) {
    if (piece.empty()) continue;
    const auto fields = split(piece, ':');
    if (fields.size() != 3) {
      throw Error(ErrorCode::bad_spec, "segment '" + piece + "' is not length:slope:intercept");
    }
    try {
      segments.push_back({std::stoul(fields[0]), std::stod(fields[1]), std::stod(fields[2])});
    } catch (const std::exception&) {
      throw Error(ErrorCode::bad_spec, "segment '" + piece + "' is not numeric");
    }
  }
  return segments;
}

struct InputArgs {
  std::string path;
  std::string x_col = "0";
  std::string y_col = "1";
  std::size_t row_limit = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--input", path, "CSV file")->required();
    cmd->add_option("--x-col", x_col, "x column: header name or 0-based index");
    cmd->add_option("--y-col", y_col, "y column: header name or 0-based index");
    cmd->add_option("--row-limit", row_limit, "read only the first N data rows (0 = all)");
  }

  LoadResult load(std::ostream& err) const {
    LoadOptions options;
    if (row_limit > 0) options.max_rows = row_limit;
    LoadResult loaded = load_csv(path, x_col, y_col, options);
    const auto& r = loaded.report;
    err << "loaded " << r.rows_used << " of " << r.rows_read << " rows from " << path << " ("
        << r.rows_skipped << " skipped)\n";
    return loaded;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!(file << text)) throw Error(ErrorCode::write_failed, "cannot write '" + path + "'");
}

int exit_for(const Error& e) {
  switch (e.error_class()) {
    case ErrorClass::usage: return kExitUsage;
    case ErrorClass::capacity: return kExitCapacity;
    case ErrorClass::data: break;
  }
  return kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Impact-driven discretization of a numerical attribute"};
  app.require_subcommand(1);

  // discretize
  InputArgs d_in;
  std::size_t d_k = 0;
  std::string d_objective = "lsqm", d_method = "dp", d_output, d_format = "json";
  std::uint64_t d_cap = kEnumerationCap;
  std::size_t d_budget_mb = 1024;
  bool d_serial = false;
  auto* discretize = app.add_subcommand("discretize", "optimal order-preserving k-partitioning");
  d_in.attach(discretize);
  discretize->add_option("--k", d_k, "number of partitions")->required();
  discretize->add_option("--objective", d_objective, "lsqm | ladm")
      ->check(CLI::IsMember({"lsqm", "ladm"}, CLI::ignore_case));
  discretize->add_option("--method", d_method, "dp | brute")->check(CLI::IsMember({"dp", "brute"}));
  discretize->add_option("--output", d_output, "write the result here instead of stdout");
  discretize->add_option("--format", d_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  discretize->add_option("--enumeration-cap", d_cap, "candidate limit for --method brute");
  discretize->add_option("--memory-budget-mb", d_budget_mb, "cap for the cached LADM cost table");
  discretize->add_flag("--serial", d_serial, "disable OpenMP");

  // curve
  InputArgs c_in;
  std::size_t c_k_max = 0;
  std::string c_objective = "lsqm";
  auto* curve = app.add_subcommand("curve", "optimal cost for k = 1..k_max");
  c_in.attach(curve);
  curve->add_option("--k-max", c_k_max, "largest partition count")->required();
  curve->add_option("--objective", c_objective, "lsqm | ladm")
      ->check(CLI::IsMember({"lsqm", "ladm"}, CLI::ignore_case));

  // baseline
  InputArgs b_in;
  std::size_t b_k = 0;
  std::string b_method;
  auto* baseline = app.add_subcommand("baseline", "equal-width / equal-frequency binning");
  b_in.attach(baseline);
  baseline->add_option("--k", b_k, "number of bins")->required();
  baseline->add_option("--method", b_method, "equal-width | equal-frequency")
      ->required()
      ->check(CLI::IsMember({"equal-width", "equal-frequency"}));

  // compare
  std::string cuts_a, cuts_b;
  double tolerance = kDefaultMatchTolerance;
  auto* compare = app.add_subcommand("compare", "agreement between two cut-point sets");
  compare->add_option("--cuts-a", cuts_a, "comma separated cut points")->required();
  compare->add_option("--cuts-b", cuts_b, "comma separated cut points")->required();
  compare->add_option("--tolerance", tolerance, "largest |a - b| counted as a match")
      ->check(CLI::NonNegativeNumber);

  // synth
  SynthSpec synth_spec;
  std::string s_family = "step", s_levels, s_blocks, s_segments, s_out;
  auto* synth = app.add_subcommand("synth", "generate a synthetic series as CSV");
  synth->add_option("--family", s_family, "step | linear | mixed | constant_noise");
  synth->add_option("--n", synth_spec.n, "number of points");
  synth->add_option("--levels", s_levels, "comma separated step levels");
  synth->add_option("--block-lengths", s_blocks, "comma separated step block lengths");
  synth->add_option("--slope", synth_spec.slope, "linear slope");
  synth->add_option("--intercept", synth_spec.intercept, "linear intercept");
  synth->add_option("--segments", s_segments, "mixed: length:slope:intercept;...");
  synth->add_option("--noise-sd", synth_spec.noise_sd, "Gaussian noise sd");
  synth->add_option("--seed", synth_spec.seed, "RNG seed");
  synth->add_option("--out", s_out, "output CSV (stdout if omitted)");

  // oracle-check
  std::size_t o_n = 8, o_k = 3, o_trials = 100;
  std::uint64_t o_seed = 1;
  auto* oracle = app.add_subcommand("oracle-check", "compare the DP against exhaustive search");
  oracle->add_option("--n", o_n, "points per series");
  oracle->add_option("--k", o_k, "largest k checked");
  oracle->add_option("--trials", o_trials, "number of random series");
  oracle->add_option("--seed", o_seed, "RNG seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*discretize) {
      const auto loaded = d_in.load(err);
      SolveResult result;
      const Objective objective = parse_objective(d_objective);
      if (d_method == "brute") {
        result = brute_force_partition(loaded.series, d_k, objective, d_cap);
      } else {
        SolveOptions options;
        options.parallel = !d_serial;
        options.cost.dense_budget_bytes = d_budget_mb << 20;
        result = optimal_partition(loaded.series, d_k, objective, options);
      }
      const OutputFormat format = parse_output_format(d_format);
      if (d_output.empty()) {
        write_result(result, format, out);
      } else {
        write_result(result, format, std::filesystem::path(d_output));
      }
    } else if (*curve) {
      const auto loaded = c_in.load(err);
      const Objective objective = parse_objective(c_objective);
      out << to_json(cost_curve(loaded.series, c_k_max, objective), objective).dump(2) << '\n';
    } else if (*baseline) {
      const auto loaded = b_in.load(err);
      const BinSpec spec = parse_bin_method(b_method) == BinMethod::equal_width
                               ? equal_width(loaded.series, b_k)
                               : equal_frequency(loaded.series, b_k);
      out << to_json(spec).dump(2) << '\n';
    } else if (*compare) {
      const auto report = agreement_score({parse_list(cuts_a)}, {parse_list(cuts_b)}, tolerance);
      out << to_json(report).dump(2) << '\n';
    } else if (*synth) {
      synth_spec.family = parse_synth_family(s_family);
      synth_spec.levels = parse_list(s_levels);
      for (double len : parse_list(s_blocks)) {
        if (len < 1 || len != static_cast<double>(static_cast<std::size_t>(len))) {
          throw Error(ErrorCode::bad_spec, "block lengths must be positive integers");
        }
        synth_spec.block_lengths.push_back(static_cast<std::size_t>(len));
      }
      synth_spec.segments = parse_segments(s_segments);
      std::ostringstream csv;
      write_series_csv(generate(synth_spec), csv);
      emit(csv.str(), s_out, out);
    } else if (*oracle) {
      const auto report = oracle_check(o_n, o_k, o_trials, o_seed);
      json mismatches = json::array();
      for (const auto& m : report.mismatches) {
        mismatches.push_back({{"trial", m.trial},
                              {"objective", to_string(m.objective)},
                              {"k", m.k},
                              {"dp_cost", m.dp_cost},
                              {"brute_cost", m.brute_cost},
                              {"dp_cuts", m.dp_cuts},
                              {"brute_cuts", m.brute_cuts}});
      }
      out << json{{"status", report.passed() ? "pass" : "fail"},
                  {"n", o_n},
                  {"k_max", o_k},
                  {"trials", report.trials},
                  {"comparisons", report.comparisons},
                  {"mismatches", std::move(mismatches)}}
                 .dump(2)
          << '\n';
      return report.passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return kExitOk;
}

}  // namespace idisc
