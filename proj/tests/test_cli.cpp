// Copyright 2026 The interval-robust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("irobust-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

/// Runs the CLI with INTERVAL_ROBUST_SEED scrubbed unless `env` overrides it.
RunResult run_cli(const TempDir& dir, const std::string& args, const std::string& env = "") {
  const fs::path out_path = dir.path / "stdout.txt";
  const fs::path err_path = dir.path / "stderr.txt";
  std::string cmd = "env -u INTERVAL_ROBUST_SEED " + env + (env.empty() ? "" : " ") +
                    "'" IROBUST_CLI_PATH "' " + args + " > '" + out_path.string() + "' 2> '" +
                    err_path.string() + "'";
  const int status = std::system(cmd.c_str());
  RunResult res;
  if (status != -1 && WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  res.out = slurp(out_path);
  res.err = slurp(err_path);
  return res;
}

const char* kSmallSpec =
    "mid_law = normal(0, 1)\n"
    "spr_law = uniform(1, 3)\n"
    "theta = 1\n"
    "sample_sizes = 50, 200\n"
    "replications = 16\n"
    "seed = 42\n";

}  // namespace

TEST_CASE("estimate: single-row dataset") {
  TempDir dir;
  spit(dir.path / "data.csv", "inf,sup\n3,7\n");
  const fs::path report = dir.path / "report.json";
  const RunResult res = run_cli(
      dir, "estimate '" + (dir.path / "data.csv").string() + "' --output '" + report.string() +
               "'");
  CHECK(res.exit_code == 0);

  const auto doc = nlohmann::json::parse(slurp(report));
  CHECK(doc["median"]["estimate"]["inf"] == 3.0);
  CHECK(doc["median"]["estimate"]["sup"] == 7.0);
  CHECK(doc["mean"]["inf"] == 3.0);
  CHECK(doc["mean"]["sup"] == 7.0);
  CHECK(doc["median"]["objective"] == 0.0);
  CHECK(doc["params"]["theta"] == 1.0);
  CHECK(doc["tool"]["version"].is_string());
}

TEST_CASE("estimate: mean of two intervals and csv output") {
  TempDir dir;
  spit(dir.path / "data.csv", "inf,sup\n0,2\n2,4\n");
  const RunResult res =
      run_cli(dir, "estimate '" + (dir.path / "data.csv").string() + "' --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("# interval-robust") == 0);
  CHECK(res.out.find("estimator,inf,sup,mid,spr,objective,iterations,converged,unique,"
                     "final_step\n") != std::string::npos);
  CHECK(res.out.find("mean,1,3,2,1,,,,,\n") != std::string::npos);
}

TEST_CASE("estimate: collinear dataset warns but succeeds") {
  TempDir dir;
  spit(dir.path / "data.csv", "inf,sup\n0,0\n1,1\n2,2\n");
  const RunResult res = run_cli(dir, "estimate '" + (dir.path / "data.csv").string() + "'");
  CHECK(res.exit_code == 0);
  CHECK(res.err.find("non-unique") != std::string::npos);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["median"]["unique"] == false);
}

TEST_CASE("estimate: data errors exit 2") {
  TempDir dir;
  spit(dir.path / "bad.csv", "mid,spr\n1,-0.5\n");
  CHECK(run_cli(dir, "estimate '" + (dir.path / "bad.csv").string() + "'").exit_code == 2);

  const RunResult missing = run_cli(dir, "estimate '" + (dir.path / "nope.csv").string() + "'");
  CHECK(missing.exit_code == 2);

  spit(dir.path / "hdr.csv", "lo,hi\n1,2\n");
  const RunResult hdr = run_cli(dir, "estimate '" + (dir.path / "hdr.csv").string() + "'");
  CHECK(hdr.exit_code == 2);
  CHECK(hdr.err.find("line 1") != std::string::npos);
}

TEST_CASE("estimate: usage errors exit 64") {
  TempDir dir;
  spit(dir.path / "data.csv", "inf,sup\n1,2\n");
  const std::string input = (dir.path / "data.csv").string();
  CHECK(run_cli(dir, "estimate '" + input + "' --theta -1").exit_code == 64);
  CHECK(run_cli(dir, "estimate '" + input + "' --tol 0").exit_code == 64);
  CHECK(run_cli(dir, "estimate '" + input + "' --format yaml").exit_code == 64);
  CHECK(run_cli(dir, "bogus-subcommand").exit_code == 64);
}

TEST_CASE("simulate: deterministic per seed, thread count irrelevant") {
  TempDir dir;
  spit(dir.path / "exp.cfg", kSmallSpec);
  const std::string spec = (dir.path / "exp.cfg").string();

  auto simulate = [&](const std::string& tag, const std::string& extra) {
    const fs::path rows = dir.path / (tag + ".csv");
    const RunResult res = run_cli(
        dir, "simulate '" + spec + "' --output '" + rows.string() + "' " + extra);
    REQUIRE(res.exit_code == 0);
    return std::pair<std::string, std::string>(slurp(rows),
                                               slurp(dir.path / (tag + ".csv.summary.json")));
  };

  const auto [rows_a, summary_a] = simulate("a", "--threads 2");
  const auto [rows_b, summary_b] = simulate("b", "--threads 2");
  const auto [rows_c, summary_c] = simulate("c", "--threads 1");
  CHECK(rows_a == rows_b);
  CHECK(rows_a == rows_c);
  CHECK(summary_a == summary_b);
  CHECK(summary_a == summary_c);
  CHECK(rows_a.find("n,replication,error\n") != std::string::npos);
}

TEST_CASE("simulate: symmetric truth and shrinking error") {
  TempDir dir;
  spit(dir.path / "exp.cfg", kSmallSpec);
  const fs::path rows = dir.path / "rows.csv";
  const RunResult res = run_cli(dir, "simulate '" + (dir.path / "exp.cfg").string() +
                                         "' --output '" + rows.string() + "'");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("truth [-2, 2] (symmetry)") != std::string::npos);

  const auto summary = nlohmann::json::parse(slurp(dir.path / "rows.csv.summary.json"));
  REQUIRE(summary["summary"].size() == 2);
  const double median_small = summary["summary"][0]["median_error"];
  const double median_large = summary["summary"][1]["median_error"];
  CHECK(median_large < median_small);
  CHECK(summary["params"]["seed"] == 42);
  CHECK(summary["provenance"] == "symmetry");
}

TEST_CASE("simulate: seed overrides") {
  TempDir dir;
  spit(dir.path / "exp.cfg",
       "mid_law = normal(0, 1)\nspr_law = uniform(1, 3)\n"
       "sample_sizes = 30\nreplications = 8\nseed = 42\n");
  const std::string spec = (dir.path / "exp.cfg").string();

  auto simulate = [&](const std::string& tag, const std::string& extra,
                      const std::string& env) {
    const fs::path rows = dir.path / (tag + ".csv");
    const RunResult res = run_cli(
        dir, "simulate '" + spec + "' --output '" + rows.string() + "' " + extra, env);
    REQUIRE(res.exit_code == 0);
    return slurp(rows);
  };

  const std::string base = simulate("base", "", "");
  const std::string flag7 = simulate("flag7", "--seed 7", "");
  const std::string env7 = simulate("env7", "", "INTERVAL_ROBUST_SEED=7");
  const std::string env_beats_flag = simulate("envflag", "--seed 9", "INTERVAL_ROBUST_SEED=7");

  CHECK(flag7 == env7);
  CHECK(env_beats_flag == env7);
  CHECK(base != env7);

  CHECK(run_cli(dir, "simulate '" + spec + "' --output '" + (dir.path / "x.csv").string() +
                         "'",
                "INTERVAL_ROBUST_SEED=abc")
            .exit_code == 64);
}

TEST_CASE("simulate: invalid spec exits 64") {
  TempDir dir;
  spit(dir.path / "bad.cfg", "mid_law = normal(0, 1)\n");
  CHECK(run_cli(dir, "simulate '" + (dir.path / "bad.cfg").string() + "' --output '" +
                         (dir.path / "rows.csv").string() + "'")
            .exit_code == 64);

  spit(dir.path / "bad2.cfg", std::string(kSmallSpec) + "typo = 1\n");
  CHECK(run_cli(dir, "simulate '" + (dir.path / "bad2.cfg").string() + "' --output '" +
                         (dir.path / "rows.csv").string() + "'")
            .exit_code == 64);

  // a contaminated model has no defined population truth
  spit(dir.path / "contaminated.cfg",
       std::string(kSmallSpec) + "contamination.fraction = 0.1\n");
  const RunResult res = run_cli(dir, "simulate '" + (dir.path / "contaminated.cfg").string() +
                                         "' --output '" + (dir.path / "rows.csv").string() +
                                         "'");
  CHECK(res.exit_code == 64);
  CHECK(res.err.find("clean") != std::string::npos);
}

TEST_CASE("breakdown: drift table and metadata") {
  TempDir dir;
  spit(dir.path / "clean.csv", "inf,sup\n1,3\n2,4\n4,6\n5,9\n0,10\n");
  const std::string input = (dir.path / "clean.csv").string();

  const RunResult res = run_cli(
      dir, "breakdown '" + input + "' --magnitudes 1e4,1e8 --k 0,2,3");
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("# n=5 fsbp=0.6 (3/5)\n") != std::string::npos);
  CHECK(res.out.find("k,magnitude,median_drift,mean_drift\n") != std::string::npos);
  CHECK(res.out.find("0,10000,0,0\n") != std::string::npos);
  CHECK(res.out.find("0,1e+08,0,0\n") != std::string::npos);

  // k=3 at M=1e8 blows past 1e3: parse the drift column for that row
  std::istringstream lines(res.out);
  std::string line;
  bool found = false;
  while (std::getline(lines, line)) {
    if (line.rfind("3,1e+08,", 0) == 0) {
      const std::size_t second_comma = line.find(',', 2);
      const std::size_t third_comma = line.find(',', second_comma + 1);
      const double drift = std::stod(line.substr(second_comma + 1,
                                                 third_comma - second_comma - 1));
      CHECK(drift > 1e3);
      found = true;
    }
  }
  CHECK(found);

  CHECK(run_cli(dir, "breakdown '" + input + "' --magnitudes 1e4,1e8 --k 7").exit_code == 64);
  CHECK(run_cli(dir, "breakdown '" + input + "' --magnitudes 1e8,1e4 --k 1").exit_code == 64);
}

TEST_CASE("version flag") {
  TempDir dir;
  const RunResult res = run_cli(dir, "--version");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("interval-robust") != std::string::npos);
}
