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
#include <string>
#include <vector>

#include "irobust/interval.hpp"

namespace irobust {

/// Result of the d_theta-median solve.
struct EstimateReport {
  Interval estimate;
  double objective = 0.0;   // mean d_theta distance at the estimate
  int iterations = 0;       // number of update steps taken
  bool converged = false;   // step criterion met or optimality certified
  bool unique = false;      // non-collinearity verdict for the sample
  double final_step = 0.0;  // last update length over (1 + iterate norm)
};

/// Optional per-iteration record for diagnostics and tests. The initial
/// point and every subsequent iterate are appended in order.
struct IterationTrace {
  std::vector<PlanePoint> iterates;
  std::vector<double> objectives;
};

/// Exact reduced fraction; fsbp values are rationals, not floats.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

/// Search rectangle in the (mid, spr) plane for the grid oracle.
struct GridBounds {
  double mid_lo = 0.0;
  double mid_hi = 0.0;
  double spr_lo = 0.0;
  double spr_hi = 0.0;
};

/// [mean inf, mean sup]; equals [mean mid - mean spr, mean mid + mean spr].
Interval aumann_mean(const Sample& sample);

/// Mean d_theta distance from the sample to K.
double objective(const Sample& sample, const Interval& k, double theta);

/// Mean squared d_theta distance; minimized by the Aumann mean.
double squared_objective(const Sample& sample, const Interval& k, double theta);

/// True iff the transformed points (mid, sqrt(theta)*spr) do NOT all lie on
/// one line, i.e. the median is guaranteed unique. Judged by the singular
/// values of the centered coordinate matrix (ratio threshold 1e-12);
/// samples of size <= 2 and all-identical samples count as collinear.
bool collinearity_check(const Sample& sample, double theta);

/// Finite sample breakdown point floor((n+1)/2) / n, reduced.
Rational fsbp(long long n);

/// Sample d_theta-median: the interval minimizing the mean d_theta distance
/// to the sample.
///
/// The sample is mapped isometrically to points in R x [0, inf) and the
/// Euclidean geometric median is computed by Weiszfeld iteration with the
/// Vardi-Zhang correction (PNAS 97(4), 2000): an iterate that coincides with
/// a data site is either certified optimal by the subgradient norm test or
/// stepped away with the damped update. The v >= 0 constraint never binds
/// (the median lies in the convex hull of the data); negative round-off is
/// clamped. Throws NumericFailure if an iterate turns non-finite.
EstimateReport dtheta_median(const Sample& sample, const ThetaConfig& cfg,
                             IterationTrace* trace = nullptr);

/// Exhaustive grid argmin of `objective` over bounds intersected with
/// spr >= 0. Ties break to the smallest mid, then the smallest spr.
/// Independent of the Weiszfeld path; intended as a test oracle.
Interval brute_force_median(const Sample& sample, double theta, const GridBounds& bounds,
                            double step);

/// Bounding box of the sample's (mid, spr) points inflated on every side by
/// the box diagonal, spr_lo clamped to 0. Contains every minimizer.
GridBounds inflated_bounds(const Sample& sample);

}  // namespace irobust
