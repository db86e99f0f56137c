#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "idisc/cli.hpp"
#include "json.hpp"

using namespace idisc;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "idisc");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("idisc_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

const std::string kStep = "x,y\n1,0\n2,0\n3,0\n4,10\n5,10\n6,10\n";

}  // namespace

TEST_CASE("discretize writes JSON") {
  const auto path = write_temp("step.csv", kStep);
  const auto r = run({"discretize", "--input", path, "--x-col", "x", "--y-col", "y", "--k", "2",
                      "--objective", "lsqm"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["cut_points"] == json::array({3.0}));
  CHECK(j["total_cost"] == 0.0);
  CHECK(r.err.find("loaded 6 of 6 rows") != std::string::npos);

  const auto brute = run({"discretize", "--input", path, "--x-col", "x", "--y-col", "y", "--k", "2",
                          "--objective", "ladm", "--method", "brute", "--format", "csv"});
  REQUIRE(brute.code == kExitOk);
  CHECK(brute.out.find("summary,2,0,6,,0,,,,ladm,brute") != std::string::npos);
}

TEST_CASE("curve, baseline and compare") {
  const auto path = write_temp("step2.csv", kStep);
  const auto c = run({"curve", "--input", path, "--x-col", "x", "--y-col", "y", "--k-max", "3",
                      "--objective", "lsqm"});
  REQUIRE(c.code == kExitOk);
  const auto cj = json::parse(c.out);
  CHECK(cj["curve"].size() == 3);
  CHECK(cj["curve"][0]["cost"] == 150.0);
  CHECK(cj["curve"][1]["cost"] == 0.0);

  const auto b = run({"baseline", "--input", path, "--x-col", "x", "--y-col", "y", "--k", "3",
                      "--method", "equal-frequency"});
  REQUIRE(b.code == kExitOk);
  CHECK(json::parse(b.out)["edges"] == json::array({2.0, 4.0}));

  const auto w = run({"baseline", "--input", path, "--k", "2", "--method", "equal-width"});
  REQUIRE(w.code == kExitOk);
  CHECK(json::parse(w.out)["edges"] == json::array({3.5}));

  const auto cmp = run({"compare", "--cuts-a", "20,50", "--cuts-b", "48,60"});
  REQUIRE(cmp.code == kExitOk);
  const auto cmpj = json::parse(cmp.out);
  CHECK(cmpj["score"] == 0.5);
  CHECK(cmpj["band"] == "Medium");

  const auto same = run({"compare", "--cuts-a", "50", "--cuts-b", "50", "--tolerance", "0"});
  CHECK(json::parse(same.out)["band"] == "Very High");
}

TEST_CASE("synth then discretize") {
  const auto out = (std::filesystem::temp_directory_path() / "idisc_cli_synth.csv").string();
  const auto s = run({"synth", "--family", "step", "--n", "9", "--levels", "0,10,20", "--noise-sd",
                      "0", "--seed", "3", "--out", out});
  REQUIRE(s.code == kExitOk);
  const auto d = run({"discretize", "--input", out, "--x-col", "x", "--y-col", "y", "--k", "3",
                      "--objective", "ladm"});
  REQUIRE(d.code == kExitOk);
  CHECK(json::parse(d.out)["cut_indices"] == json::array({3, 6}));

  const auto to_stdout = run({"synth", "--family", "linear", "--n", "3", "--slope", "2"});
  CHECK(to_stdout.out == "x,y\n1,2\n2,4\n3,6\n");
}

TEST_CASE("oracle-check") {
  const auto r = run({"oracle-check", "--n", "7", "--k", "3", "--trials", "10", "--seed", "4"});
  REQUIRE(r.code == kExitOk);
  const auto j = json::parse(r.out);
  CHECK(j["status"] == "pass");
  CHECK(j["comparisons"] == 60);
}

TEST_CASE("exit codes") {
  const auto path = write_temp("step3.csv", kStep);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"discretize", "--input", path}).code == kExitUsage);
  CHECK(run({"discretize", "--input", path, "--k", "2", "--objective", "median"}).code == kExitUsage);
  CHECK(run({"discretize", "--input", path, "--k", "0"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  CHECK(run({"discretize", "--input", "/no/such/file.csv", "--k", "2"}).code == kExitData);
  CHECK(run({"discretize", "--input", path, "--x-col", "nope", "--k", "2"}).code == kExitData);
  CHECK(run({"synth", "--family", "step", "--n", "5", "--levels", "1,1"}).code == kExitData);
  CHECK(run({"compare", "--cuts-a", "x", "--cuts-b", "1"}).code == kExitData);

  CHECK(run({"discretize", "--input", path, "--k", "7"}).code == kExitCapacity);
  CHECK(run({"discretize", "--input", path, "--k", "3", "--method", "brute", "--enumeration-cap", "5"})
            .code == kExitCapacity);
}
