#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blackwell/cli.hpp"

namespace fs = std::filesystem;
using blackwell::cli::run;

namespace {

const fs::path kGolden = BLACKWELL_GOLDEN_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string input(const std::string& name) { return (kGolden / "inputs" / name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Compares against tests/golden/<name>; BLACKWELL_UPDATE_GOLDEN=1 rewrites it.
void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const Result r = call(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  const fs::path path = kGolden / name;
  if (std::getenv("BLACKWELL_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path, std::ios::binary) << r.out;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), path.string());
  CHECK_MESSAGE(r.out == slurp(path), name);
}

}  // namespace

TEST_CASE("generated instances match the checked-in inputs") {
  check_golden("inputs/fig1a.json", {"generate", "--family", "fig1a"});
  check_golden("inputs/fig1b.json", {"generate", "--family", "fig1b"});
  check_golden("inputs/fig3.json", {"generate", "--family", "fig3"});
  check_golden("inputs/lower_bound_6.json", {"generate", "--family", "lower-bound", "--params", "n=6,eps=1/3"});
  check_golden("inputs/healthcare_6.json", {"generate", "--family", "healthcare", "--params", "n=6"});
  check_golden("inputs/healthcare_15.json", {"generate", "--family", "healthcare", "--params", "n=15"});
  check_golden("inputs/random_3_2_5.json",
               {"generate", "--family", "random", "--params", "n=3,k=2,seed=5", "--params", "branching=2"});
}

TEST_CASE("golden outputs") {
  check_golden("solve_fig1a_howard.json", {"solve", "--algorithm", "howard", "--input", input("fig1a.json"), "--trace"});
  check_golden("solve_fig1a_random_facet.json",
               {"solve", "-a", "random-facet", "-i", input("fig1a.json"), "--seed", "3", "--trace"});
  check_golden("solve_fig1b_rspi.json", {"solve", "-a", "rspi", "-i", input("fig1b.json"), "--seed", "7"});
  check_golden("solve_fig1b_bspi.json", {"solve", "-a", "bspi", "-i", input("fig1b.json"), "--batch-size", "3"});
  check_golden("solve_fig1b_detmdp.json", {"solve", "-a", "detmdp", "-i", input("fig1b.json")});
  check_golden("solve_fig3_max_gain.txt", {"solve", "-a", "max-gain", "-i", input("fig3.json"), "--format", "text"});
  check_golden("oracle_fig1a.json", {"oracle", "-i", input("fig1a.json")});
  check_golden("threshold_fig3.json", {"threshold", "-i", input("fig3.json")});
  check_golden("threshold_fig1b_exact.json",
               {"threshold", "-i", input("fig1b.json"), "--mode", "exact", "--width", "1e-4"});
  check_golden("threshold_lower_bound_6.json", {"threshold", "-i", input("lower_bound_6.json")});
  check_golden("evaluate_fig1a_laurent.json",
               {"evaluate", "-i", input("fig1a.json"), "--policy", "[0,0,0]", "--laurent"});
  check_golden("compare_example.json", {"compare-ratfun", "--r1", R"({"num": ["-10","25","-20","5"], "den": ["-2","1"]})",
                                        "--r2", R"({"num": ["-5","6","-1"], "den": ["-4","1"]})"});
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"frobnicate"}).code == 1);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"solve", "-i", input("fig1a.json"), "-a", "simplex"}).code == 1);
  CHECK(call({"solve", "-i", input("fig1a.json"), "-a", "howard", "--batch-size", "2"}).code == 1);
  CHECK(call({"solve", "-i", input("fig1a.json"), "-a", "howard", "--seed", "2"}).code == 1);
  CHECK(call({"solve", "-i", input("fig1a.json"), "--initial-policy", "[5,0,0]"}).code == 1);
  CHECK(call({"threshold", "-i", input("fig3.json"), "--width", "-1"}).code == 1);
  CHECK(call({"generate", "--family", "lower-bound", "--params", "n=7"}).code == 1);
  CHECK(call({"generate", "--family", "fig1a", "--params", "bogus=1"}).code == 1);
  CHECK(call({"compare-ratfun", "--r1", R"({"num": ["1"], "den": ["1"]})"}).code == 1);

  CHECK(call({"solve", "-i", input("does_not_exist.json")}).code == 2);
  const Result invalid = call({"solve", "-i", input("invalid_row_sum.json")});
  CHECK(invalid.code == 2);
  CHECK(invalid.err.find("row sum") != std::string::npos);
  CHECK(call({"oracle", "-i", input("malformed.json")}).code == 2);

  const Result det = call({"solve", "-a", "detmdp", "-i", input("healthcare_15.json")});
  CHECK(det.code == 3);
  CHECK(det.err.find("DMDP") != std::string::npos);

  CHECK(call({"oracle", "-i", input("healthcare_15.json")}).code == 4);
  CHECK(call({"oracle", "-i", input("fig1b.json"), "--budget", "10"}).code == 4);
  CHECK(call({"threshold", "-i", input("healthcare_15.json"), "--mode", "exact"}).code == 4);
}

TEST_CASE("generate writes to a file") {
  const fs::path out = fs::temp_directory_path() / "blackwell_cli_generate_test.json";
  CHECK(call({"generate", "--family", "fig3", "--output", out.string()}).code == 0);
  CHECK(slurp(out) == slurp(kGolden / "inputs" / "fig3.json"));
  fs::remove(out);
}

TEST_CASE("repeated invocations are byte-identical") {
  const std::vector<std::string> args{"solve", "-a", "random-facet", "-i", input("random_3_2_5.json"), "--seed", "11",
                                      "--trace"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> t{"threshold", "-i", input("healthcare_6.json"), "--log-width", "0.01"};
  CHECK(call(t).out == call(t).out);
}

TEST_CASE("solver outputs have no improving pair") {
  for (const char* file : {"fig1a.json", "fig1b.json", "fig3.json", "lower_bound_6.json", "healthcare_6.json",
                           "random_3_2_5.json"}) {
    for (const char* algo : {"howard", "max-gain", "bspi", "rspi", "random-facet", "detmdp"}) {
      const Result s = call({"solve", "-a", algo, "-i", input(file)});
      if (std::string(algo) == "detmdp" && s.code == 3) continue;
      REQUIRE(s.code == 0);
      const auto policy = nlohmann::json::parse(s.out).at("policy").dump();
      const Result e = call({"evaluate", "-i", input(file), "--policy", policy});
      REQUIRE(e.code == 0);
      CHECK_MESSAGE(nlohmann::json::parse(e.out).at("improving_pairs").empty(), file, " ", algo);
    }
  }
}

TEST_CASE("compare-ratfun reads a file") {
  const Result r = call({"compare-ratfun", "-i", input("compare_example.json"), "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "Less\n");
}
