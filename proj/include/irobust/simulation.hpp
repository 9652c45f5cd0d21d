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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irobust/estimators.hpp"
#include "irobust/interval.hpp"
#include "irobust/rng.hpp"

namespace irobust {

/// Law of the interval midpoint.
struct MidLaw {
  enum class Kind { normal, uniform };

  static MidLaw normal(double mean, double stddev);
  static MidLaw uniform(double lo, double hi);

  Kind kind = Kind::normal;
  double p1 = 0.0;
  double p2 = 1.0;

  double sample(RandomStream& rng) const;
  /// Center of symmetry; both supported mid laws have one.
  double symmetry_center() const;
  std::string str() const;
};

/// Law of the interval spread; supported on [0, inf).
struct SprLaw {
  enum class Kind { uniform, half_normal, lognormal };

  static SprLaw uniform(double lo, double hi);  // requires lo >= 0
  static SprLaw half_normal(double sigma);
  static SprLaw lognormal(double log_mean, double log_stddev);

  Kind kind = Kind::uniform;
  double p1 = 0.0;
  double p2 = 1.0;

  double sample(RandomStream& rng) const;
  /// Center of symmetry when the law has one (uniform only).
  std::optional<double> symmetry_center() const;
  std::string str() const;
};

/// Point contamination: with probability `fraction` a draw is shifted by
/// (mid_shift, spr_shift).
struct Contamination {
  double fraction = 0.0;   // in [0, 1)
  double mid_shift = 0.0;
  double spr_shift = 0.0;  // >= 0
};

/// Random-interval model: independent mid and spr laws plus optional
/// contamination.
struct IntervalDistribution {
  MidLaw mid_law;
  SprLaw spr_law;
  std::optional<Contamination> contamination;

  void validate() const;
  bool contaminated() const { return contamination && contamination->fraction > 0.0; }
};

/// Declarative Monte Carlo configuration.
struct ExperimentSpec {
  IntervalDistribution distribution;
  double theta = 1.0;
  std::vector<int> sample_sizes;  // strictly ascending, all >= 1
  int replications = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct TruthProvenance {
  enum class Kind { symmetry, large_sample };
  Kind kind = Kind::symmetry;
  long sample_count = 0;  // N for large_sample

  std::string str() const;
};

struct ExperimentRow {
  int n = 0;
  int replication = 0;
  double error = 0.0;  // d_theta(estimate, truth)
};

struct SummaryRow {
  int n = 0;
  double mean_error = 0.0;
  double median_error = 0.0;
  double q90_error = 0.0;
};

/// Rows ordered by (n, replication); summaries per n recomputable from rows.
struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<SummaryRow> summaries;
  Interval truth;
  TruthProvenance provenance;
};

struct BreakdownRow {
  int replaced = 0;
  double magnitude = 0.0;
  double median_drift = 0.0;
  double mean_drift = 0.0;
};

/// n independent draws from the model. Identical (dist, n, stream seed)
/// produce bit-identical samples.
Sample sample_intervals(const IntervalDistribution& dist, int n, RandomStream& rng);

inline constexpr std::uint64_t kTruthOracleSeed = 0x1d8af9u;
inline constexpr long kTruthSampleCount = 1000000;

/// Population-median ground truth for a clean model (contamination must be
/// absent or zero). When both marginal laws are symmetric the transformed
/// joint law is centrally symmetric and the median is the center; otherwise
/// the truth is the sample median of one large draw (plug-in at N = 10^6).
std::pair<Interval, TruthProvenance> population_median_truth(
    const IntervalDistribution& dist, double theta,
    std::uint64_t oracle_seed = kTruthOracleSeed);

/// For each n and replication: draw a sample from the substream hashed from
/// (seed, n, replication), estimate the median, record the d_theta error
/// against the truth. Replications may run on `threads` workers; the output
/// is identical for any thread count.
ExperimentResult consistency_experiment(const ExperimentSpec& spec, int threads = 1);

/// Replaces the last `replaced` observations with the degenerate interval
/// [M, M] for each magnitude M and records the d_theta drift of the median
/// and of the mean relative to the clean-sample estimates.
std::vector<BreakdownRow> breakdown_experiment(const Sample& base, const ThetaConfig& cfg,
                                               const std::vector<double>& magnitudes,
                                               int replaced);

}  // namespace irobust
