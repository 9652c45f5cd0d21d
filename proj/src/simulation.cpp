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

#include "irobust/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "irobust/number_format.hpp"

namespace irobust {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Linear-interpolation quantile on a sorted copy (the convention used by
// most stats packages for their default quantile type).
double quantile(std::vector<double> v, double p) {
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = pos - static_cast<double>(lo);
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

// Runs fn(0..count-1) on up to `threads` workers in contiguous blocks.
// Exceptions are captured and rethrown on the caller thread.
void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int workers = std::min(threads, count);
  std::vector<std::thread> pool;
  std::mutex mu;
  std::exception_ptr first_error;
  const int block = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int begin = w * block;
    const int end = std::min(count, begin + block);
    pool.emplace_back([&, begin, end] {
      try {
        for (int i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

MidLaw MidLaw::normal(double mean, double stddev) {
  require(std::isfinite(mean), "normal mid law: mean must be finite");
  require(std::isfinite(stddev) && stddev > 0.0, "normal mid law: stddev must be > 0");
  return MidLaw{Kind::normal, mean, stddev};
}

MidLaw MidLaw::uniform(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo <= hi,
          "uniform mid law: requires finite lo <= hi");
  return MidLaw{Kind::uniform, lo, hi};
}

double MidLaw::sample(RandomStream& rng) const {
  switch (kind) {
    case Kind::normal:
      return rng.normal(p1, p2);
    case Kind::uniform:
      return rng.uniform(p1, p2);
  }
  throw InvalidParameter("unknown mid law");
}

double MidLaw::symmetry_center() const {
  return kind == Kind::normal ? p1 : p1 / 2 + p2 / 2;
}

std::string MidLaw::str() const {
  const char* name = kind == Kind::normal ? "normal" : "uniform";
  return std::string(name) + "(" + format_double(p1) + ", " + format_double(p2) + ")";
}

SprLaw SprLaw::uniform(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && 0.0 <= lo && lo <= hi,
          "uniform spr law: requires 0 <= lo <= hi");
  return SprLaw{Kind::uniform, lo, hi};
}

SprLaw SprLaw::half_normal(double sigma) {
  require(std::isfinite(sigma) && sigma > 0.0, "half_normal spr law: sigma must be > 0");
  return SprLaw{Kind::half_normal, sigma, 0.0};
}

SprLaw SprLaw::lognormal(double log_mean, double log_stddev) {
  require(std::isfinite(log_mean), "lognormal spr law: mu must be finite");
  require(std::isfinite(log_stddev) && log_stddev > 0.0,
          "lognormal spr law: sigma must be > 0");
  return SprLaw{Kind::lognormal, log_mean, log_stddev};
}

double SprLaw::sample(RandomStream& rng) const {
  switch (kind) {
    case Kind::uniform:
      return rng.uniform(p1, p2);
    case Kind::half_normal:
      return std::fabs(rng.normal(0.0, p1));
    case Kind::lognormal:
      return std::exp(rng.normal(p1, p2));
  }
  throw InvalidParameter("unknown spr law");
}

std::optional<double> SprLaw::symmetry_center() const {
  if (kind == Kind::uniform) return p1 / 2 + p2 / 2;
  return std::nullopt;
}

std::string SprLaw::str() const {
  switch (kind) {
    case Kind::uniform:
      return "uniform(" + format_double(p1) + ", " + format_double(p2) + ")";
    case Kind::half_normal:
      return "half_normal(" + format_double(p1) + ")";
    case Kind::lognormal:
      return "lognormal(" + format_double(p1) + ", " + format_double(p2) + ")";
  }
  return "?";
}

void IntervalDistribution::validate() const {
  if (contamination) {
    const Contamination& c = *contamination;
    if (!(c.fraction >= 0.0) || !(c.fraction < 1.0) || !std::isfinite(c.fraction)) {
      throw InvalidParameter("contamination fraction must lie in [0, 1)");
    }
    if (!std::isfinite(c.mid_shift)) {
      throw InvalidParameter("contamination mid_shift must be finite");
    }
    if (!(c.spr_shift >= 0.0) || !std::isfinite(c.spr_shift)) {
      throw InvalidParameter("contamination spr_shift must be a finite nonnegative real");
    }
  }
}

void ExperimentSpec::validate() const {
  distribution.validate();
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
  if (sample_sizes.empty()) {
    throw InvalidInput("sample_sizes must not be empty");
  }
  int prev = 0;
  for (int n : sample_sizes) {
    if (n < 1) throw InvalidInput("sample sizes must be >= 1");
    if (n <= prev) throw InvalidInput("sample_sizes must be strictly ascending");
    prev = n;
  }
  if (replications < 1) throw InvalidInput("replications must be >= 1");
}

std::string TruthProvenance::str() const {
  if (kind == Kind::symmetry) return "symmetry";
  return "large_sample(" + std::to_string(sample_count) + ")";
}

Sample sample_intervals(const IntervalDistribution& dist, int n, RandomStream& rng) {
  dist.validate();
  if (n < 1) throw InvalidInput("sample size must be >= 1");
  const double eps = dist.contamination ? dist.contamination->fraction : 0.0;
  std::vector<Interval> items;
  items.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double mid = dist.mid_law.sample(rng);
    double spr = dist.spr_law.sample(rng);
    if (eps > 0.0 && rng.uniform01() < eps) {
      mid += dist.contamination->mid_shift;
      spr += dist.contamination->spr_shift;
    }
    items.push_back(Interval::from_mid_spr(mid, spr));
  }
  return Sample(std::move(items));
}

std::pair<Interval, TruthProvenance> population_median_truth(const IntervalDistribution& dist,
                                                             double theta,
                                                             std::uint64_t oracle_seed) {
  dist.validate();
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
  if (dist.contaminated()) {
    throw InvalidInput("population truth is defined for the clean model only");
  }
  if (auto cs = dist.spr_law.symmetry_center()) {
    // Independent symmetric marginals make the transformed joint law
    // centrally symmetric about (c_m, sqrt(theta) * c_s); the spatial
    // median of such a law is its center.
    const double cm = dist.mid_law.symmetry_center();
    return {Interval::from_mid_spr(cm, *cs), TruthProvenance{TruthProvenance::Kind::symmetry, 0}};
  }
  RandomStream rng = RandomStream::substream(oracle_seed, 0, 0);
  Sample big = sample_intervals(dist, static_cast<int>(kTruthSampleCount), rng);
  ThetaConfig cfg;
  cfg.theta = theta;
  EstimateReport rep = dtheta_median(big, cfg);
  return {rep.estimate,
          TruthProvenance{TruthProvenance::Kind::large_sample, kTruthSampleCount}};
}

ExperimentResult consistency_experiment(const ExperimentSpec& spec, int threads) {
  spec.validate();
  auto [truth, provenance] = population_median_truth(spec.distribution, spec.theta);

  ThetaConfig cfg;
  cfg.theta = spec.theta;

  ExperimentResult out;
  out.truth = truth;
  out.provenance = provenance;
  out.rows.reserve(spec.sample_sizes.size() * static_cast<std::size_t>(spec.replications));

  for (int n : spec.sample_sizes) {
    std::vector<double> errors(static_cast<std::size_t>(spec.replications));
    parallel_for(spec.replications, threads, [&](int r) {
      RandomStream rng = RandomStream::substream(spec.seed, static_cast<std::uint64_t>(n),
                                                 static_cast<std::uint64_t>(r));
      Sample s = sample_intervals(spec.distribution, n, rng);
      try {
        EstimateReport rep = dtheta_median(s, cfg);
        errors[static_cast<std::size_t>(r)] = d_theta(rep.estimate, truth, spec.theta);
      } catch (const NumericFailure& e) {
        throw NumericFailure("n=" + std::to_string(n) + " replication=" + std::to_string(r) +
                                 ": " + e.what(),
                             e.iteration());
      }
    });
    for (int r = 0; r < spec.replications; ++r) {
      out.rows.push_back(ExperimentRow{n, r, errors[static_cast<std::size_t>(r)]});
    }
    out.summaries.push_back(
        SummaryRow{n, mean_of(errors), quantile(errors, 0.5), quantile(errors, 0.9)});
  }
  return out;
}

std::vector<BreakdownRow> breakdown_experiment(const Sample& base, const ThetaConfig& cfg,
                                               const std::vector<double>& magnitudes,
                                               int replaced) {
  cfg.validate();
  const int n = static_cast<int>(base.size());
  if (replaced < 0 || replaced > n) {
    throw InvalidInput("replaced count must lie in [0, n]");
  }
  double prev = 0.0;
  for (double m : magnitudes) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw InvalidInput("magnitudes must be positive finite reals");
    }
    if (m <= prev) throw InvalidInput("magnitudes must be strictly ascending");
    prev = m;
  }

  const Interval clean_median = dtheta_median(base, cfg).estimate;
  const Interval clean_mean = aumann_mean(base);

  std::vector<BreakdownRow> rows;
  rows.reserve(magnitudes.size());
  for (double m : magnitudes) {
    std::vector<Interval> items = base.items();
    // The last `replaced` indices are overwritten deterministically; a
    // worst-case notion needs no randomization.
    for (int j = 0; j < replaced; ++j) {
      items[static_cast<std::size_t>(n - 1 - j)] = Interval(m, m);
    }
    Sample contaminated(std::move(items));
    const Interval med = dtheta_median(contaminated, cfg).estimate;
    const Interval mean = aumann_mean(contaminated);
    rows.push_back(BreakdownRow{replaced, m, d_theta(med, clean_median, cfg.theta),
                                d_theta(mean, clean_mean, cfg.theta)});
  }
  return rows;
}

}  // namespace irobust
