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

#include "irobust/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "irobust/dataset.hpp"
#include "irobust/errors.hpp"
#include "irobust/estimators.hpp"
#include "irobust/experiment_file.hpp"
#include "irobust/number_format.hpp"
#include "irobust/rng.hpp"
#include "irobust/simulation.hpp"
#include "irobust/version.hpp"

namespace irobust::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json tool_block() {
  return ordered_json{{"name", kToolName}, {"version", kToolVersion}};
}

ordered_json params_block(double theta, double tol, int max_iter,
                          std::optional<std::uint64_t> seed) {
  ordered_json params{{"theta", theta}, {"tol", tol}, {"max_iter", max_iter}};
  if (seed) {
    params["seed"] = *seed;
  } else {
    params["seed"] = nullptr;
  }
  return params;
}

ordered_json interval_block(const Interval& k) {
  return ordered_json{{"inf", k.inf()}, {"sup", k.sup()}, {"mid", k.mid()}, {"spr", k.spr()}};
}

std::string params_comment(double theta, double tol, int max_iter,
                           std::optional<std::uint64_t> seed) {
  std::string line = "# theta=" + format_double(theta) + " tol=" + format_double(tol) +
                     " max_iter=" + std::to_string(max_iter);
  line += seed ? " seed=" + std::to_string(*seed) : " seed=";
  return line + "\n";
}

std::string tool_comment() {
  return std::string("# ") + kToolName + " " + kToolVersion + "\n";
}

/// Writes `text` to opts.output, or to `out` when no path was given.
bool deliver(const std::string& text, const std::string& output_path, std::ostream& out,
             std::ostream& err) {
  if (output_path.empty()) {
    out << text;
    return true;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open output file: " << output_path << "\n";
    return false;
  }
  file << text;
  return file.good();
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitUsage;
}

}  // namespace

int run_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
  if (!(opts.theta > 0.0)) return usage_error(err, "--theta must be positive");
  if (!(opts.tol > 0.0)) return usage_error(err, "--tol must be positive");
  if (opts.max_iter < 1) return usage_error(err, "--max-iter must be >= 1");
  if (opts.format != "json" && opts.format != "csv") {
    return usage_error(err, "--format must be json or csv");
  }

  std::optional<Sample> sample;
  try {
    sample = read_dataset(opts.input);
  } catch (const ParseError& e) {
    err << "error: " << opts.input << ": " << e.what() << "\n";
    return kExitData;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  ThetaConfig cfg{opts.theta, opts.tol, opts.max_iter};
  const Interval mean = aumann_mean(*sample);
  const EstimateReport report = dtheta_median(*sample, cfg);

  if (!report.unique) {
    err << "warning: transformed sample points are collinear; the d_theta median "
           "may be non-unique\n";
  }
  if (!report.converged) {
    err << "warning: iteration limit reached before the step tolerance was met\n";
  }

  std::string text;
  if (opts.format == "json") {
    ordered_json doc;
    doc["tool"] = tool_block();
    doc["params"] = params_block(opts.theta, opts.tol, opts.max_iter, std::nullopt);
    doc["n"] = sample->size();
    doc["mean"] = interval_block(mean);
    doc["median"] = ordered_json{{"estimate", interval_block(report.estimate)},
                                 {"objective", report.objective},
                                 {"iterations", report.iterations},
                                 {"converged", report.converged},
                                 {"unique", report.unique},
                                 {"final_step", report.final_step}};
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << tool_comment() << params_comment(opts.theta, opts.tol, opts.max_iter, std::nullopt);
    csv << "estimator,inf,sup,mid,spr,objective,iterations,converged,unique,final_step\n";
    csv << "mean," << format_double(mean.inf()) << ',' << format_double(mean.sup()) << ','
        << format_double(mean.mid()) << ',' << format_double(mean.spr()) << ",,,,,\n";
    const Interval& m = report.estimate;
    csv << "median," << format_double(m.inf()) << ',' << format_double(m.sup()) << ','
        << format_double(m.mid()) << ',' << format_double(m.spr()) << ','
        << format_double(report.objective) << ',' << report.iterations << ','
        << (report.converged ? "true" : "false") << ',' << (report.unique ? "true" : "false")
        << ',' << format_double(report.final_step) << "\n";
    text = csv.str();
  }
  return deliver(text, opts.output, out, err) ? kExitOk : kExitData;
}

int run_simulate(const SimulateOptions& opts, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec;
  try {
    spec = read_experiment_spec(opts.spec_path);
  } catch (const ParseError& e) {
    return usage_error(err, std::string("invalid experiment spec: ") + e.what());
  } catch (const InvalidInput& e) {
    return usage_error(err, std::string("invalid experiment spec: ") + e.what());
  } catch (const InvalidParameter& e) {
    return usage_error(err, std::string("invalid experiment spec: ") + e.what());
  }
  if (opts.output.empty()) return usage_error(err, "--output is required");

  if (opts.seed_override) spec.seed = *opts.seed_override;
  if (const char* env = std::getenv("INTERVAL_ROBUST_SEED")) {
    std::uint64_t seed{};
    const char* last = env + std::string_view(env).size();
    auto res = std::from_chars(env, last, seed);
    if (res.ec != std::errc() || res.ptr != last) {
      return usage_error(err, "INTERVAL_ROBUST_SEED is not an unsigned 64-bit integer");
    }
    spec.seed = seed;
  }

  int threads = opts.threads;
  if (threads < 0) return usage_error(err, "--threads must be >= 0");
  if (threads == 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
  }

  ExperimentResult result;
  try {
    result = consistency_experiment(spec, threads);
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const InvalidInput& e) {
    // e.g. a contaminated model, whose population truth is undefined
    return usage_error(err, e.what());
  }

  const ThetaConfig solver_defaults;
  std::ostringstream rows;
  rows << tool_comment()
       << params_comment(spec.theta, solver_defaults.tol, solver_defaults.max_iter, spec.seed)
       << "# rng=" << kRngAlgorithm << "\n"
       << "# mid_law=" << spec.distribution.mid_law.str()
       << " spr_law=" << spec.distribution.spr_law.str() << "\n"
       << "# truth_inf=" << format_double(result.truth.inf())
       << " truth_sup=" << format_double(result.truth.sup())
       << " provenance=" << result.provenance.str() << "\n"
       << "n,replication,error\n";
  for (const ExperimentRow& row : result.rows) {
    rows << row.n << ',' << row.replication << ',' << format_double(row.error) << '\n';
  }
  if (!deliver(rows.str(), opts.output, out, err)) return kExitData;

  ordered_json summary;
  summary["tool"] = tool_block();
  summary["params"] =
      params_block(spec.theta, solver_defaults.tol, solver_defaults.max_iter, spec.seed);
  summary["rng"] = kRngAlgorithm;
  summary["model"] = ordered_json{{"mid_law", spec.distribution.mid_law.str()},
                                  {"spr_law", spec.distribution.spr_law.str()}};
  summary["truth"] = interval_block(result.truth);
  summary["provenance"] = result.provenance.str();
  summary["replications"] = spec.replications;
  summary["summary"] = ordered_json::array();
  for (const SummaryRow& s : result.summaries) {
    summary["summary"].push_back(ordered_json{{"n", s.n},
                                              {"mean_error", s.mean_error},
                                              {"median_error", s.median_error},
                                              {"q90_error", s.q90_error}});
  }
  if (!deliver(summary.dump(2) + "\n", opts.output + ".summary.json", out, err)) {
    return kExitData;
  }

  out << "truth [" << format_double(result.truth.inf()) << ", "
      << format_double(result.truth.sup()) << "] (" << result.provenance.str() << ")\n";
  for (const SummaryRow& s : result.summaries) {
    out << "n=" << s.n << " median_error=" << format_double(s.median_error)
        << " mean_error=" << format_double(s.mean_error)
        << " q90_error=" << format_double(s.q90_error) << "\n";
  }
  return kExitOk;
}

int run_breakdown(const BreakdownOptions& opts, std::ostream& out, std::ostream& err) {
  if (!(opts.theta > 0.0)) return usage_error(err, "--theta must be positive");
  if (!(opts.tol > 0.0)) return usage_error(err, "--tol must be positive");
  if (opts.max_iter < 1) return usage_error(err, "--max-iter must be >= 1");
  if (opts.magnitudes.empty()) return usage_error(err, "--magnitudes must not be empty");
  if (opts.replaced_counts.empty()) return usage_error(err, "--k must not be empty");

  std::optional<Sample> sample;
  try {
    sample = read_dataset(opts.input);
  } catch (const ParseError& e) {
    err << "error: " << opts.input << ": " << e.what() << "\n";
    return kExitData;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  const int n = static_cast<int>(sample->size());
  for (int k : opts.replaced_counts) {
    if (k < 0 || k > n) {
      return usage_error(err, "--k values must lie in [0, n] with n = " + std::to_string(n));
    }
  }
  double prev = 0.0;
  for (double m : opts.magnitudes) {
    if (!(m > prev)) return usage_error(err, "--magnitudes must be positive and ascending");
    prev = m;
  }

  ThetaConfig cfg{opts.theta, opts.tol, opts.max_iter};
  std::ostringstream csv;
  const Rational bp = fsbp(n);
  csv << tool_comment() << params_comment(opts.theta, opts.tol, opts.max_iter, std::nullopt);
  csv << "# n=" << n << " fsbp=" << format_double(bp.value()) << " (" << bp.str() << ")\n";
  csv << "k,magnitude,median_drift,mean_drift\n";
  try {
    for (int k : opts.replaced_counts) {
      for (const BreakdownRow& row : breakdown_experiment(*sample, cfg, opts.magnitudes, k)) {
        csv << row.replaced << ',' << format_double(row.magnitude) << ','
            << format_double(row.median_drift) << ',' << format_double(row.mean_drift) << '\n';
      }
    }
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return deliver(csv.str(), opts.output, out, err) ? kExitOk : kExitData;
}

}  // namespace irobust::cli
