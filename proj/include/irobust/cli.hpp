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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace irobust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 2;    // unreadable/malformed dataset
inline constexpr int kExitUsage = 64;  // bad flags, spec file, or parameters
inline constexpr int kExitNumeric = 1; // solver numeric failure

struct EstimateOptions {
  std::string input;
  double theta = 1.0;
  double tol = 1e-10;
  int max_iter = 1000;
  std::string format = "json";  // json | csv
  std::string output;           // empty = stdout
};

struct SimulateOptions {
  std::string spec_path;
  std::string output;  // rows CSV; summary JSON goes to output + ".summary.json"
  std::optional<std::uint64_t> seed_override;
  int threads = 0;     // 0 = hardware concurrency
};

struct BreakdownOptions {
  std::string input;
  double theta = 1.0;
  double tol = 1e-10;
  int max_iter = 1000;
  std::vector<double> magnitudes;
  std::vector<int> replaced_counts;
  std::string output;  // empty = stdout
};

int run_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err);
int run_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err);
int run_breakdown(const BreakdownOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace irobust::cli
