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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "irobust/cli.hpp"
#include "irobust/errors.hpp"
#include "irobust/version.hpp"

int main(int argc, char** argv) {
  using namespace irobust;

  CLI::App app{"Robust location estimation for interval-valued data"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  cli::EstimateOptions est;
  CLI::App* estimate =
      app.add_subcommand("estimate", "Aumann mean and d_theta median of a dataset");
  estimate->add_option("input", est.input, "dataset CSV (header `inf,sup` or `mid,spr`)")
      ->required();
  estimate->add_option("--theta", est.theta, "spread weight of the d_theta metric");
  estimate->add_option("--tol", est.tol, "relative step tolerance of the solver");
  estimate->add_option("--max-iter", est.max_iter, "iteration cap of the solver");
  estimate->add_option("--format", est.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  estimate->add_option("--output", est.output, "write the report here instead of stdout");

  cli::SimulateOptions sim;
  std::uint64_t sim_seed = 0;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Monte Carlo consistency experiment from a spec file");
  simulate->add_option("spec", sim.spec_path, "experiment spec (key = value lines)")
      ->required();
  simulate->add_option("--output", sim.output,
                       "rows CSV path; the summary goes to <path>.summary.json")
      ->required();
  CLI::Option* seed_opt =
      simulate->add_option("--seed", sim_seed, "override the seed from the spec file");
  simulate->add_option("--threads", sim.threads,
                       "worker threads for replications (0 = hardware)");

  cli::BreakdownOptions brk;
  CLI::App* breakdown =
      app.add_subcommand("breakdown", "contamination drift table for a dataset");
  breakdown->add_option("input", brk.input, "dataset CSV")->required();
  breakdown->add_option("--theta", brk.theta, "spread weight of the d_theta metric");
  breakdown->add_option("--tol", brk.tol, "relative step tolerance of the solver");
  breakdown->add_option("--max-iter", brk.max_iter, "iteration cap of the solver");
  breakdown->add_option("--magnitudes", brk.magnitudes, "ascending contamination magnitudes")
      ->required()
      ->delimiter(',');
  breakdown->add_option("--k", brk.replaced_counts, "numbers of replaced observations")
      ->required()
      ->delimiter(',');
  breakdown->add_option("--output", brk.output, "write the table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cout, std::cerr);
    return cli::kExitUsage;
  }

  try {
    if (*estimate) return cli::run_estimate(est, std::cout, std::cerr);
    if (*simulate) {
      if (*seed_opt) sim.seed_override = sim_seed;
      return cli::run_simulate(sim, std::cout, std::cerr);
    }
    if (*breakdown) return cli::run_breakdown(brk, std::cout, std::cerr);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitData;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitData;
  } catch (const NumericFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kExitNumeric;
  }
  return cli::kExitUsage;
}
