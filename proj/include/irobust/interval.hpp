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

#include <cstddef>
#include <vector>

#include "irobust/errors.hpp"

namespace irobust {

/// A nonempty compact real interval [inf, sup].
///
/// Canonical storage is the endpoint pair; the (mid, spr) characterization
/// with spr = radius >= 0 is derived on demand. Both endpoints are always
/// finite and inf <= sup. Equality is exact endpoint equality.
class Interval {
public:
  Interval() : inf_(0.0), sup_(0.0) {}

  /// Validating endpoint constructor. Throws InvalidInput when the endpoints
  /// are non-finite or inf > sup.
  Interval(double inf, double sup);

  /// Builds [mid - spr, mid + spr]. Requires spr >= 0 and a finite result.
  static Interval from_mid_spr(double mid, double spr);

  double inf() const { return inf_; }
  double sup() const { return sup_; }

  // Halve-then-combine keeps both accessors finite even when sup - inf
  // would overflow.
  double mid() const { return inf_ / 2 + sup_ / 2; }
  double spr() const { return sup_ / 2 - inf_ / 2; }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.inf_ == b.inf_ && a.sup_ == b.sup_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
  double inf_;
  double sup_;
};

/// Metric parameter and solver knobs shared by the estimators.
struct ThetaConfig {
  double theta = 1.0;   // spread weight, > 0
  double tol = 1e-10;   // relative step threshold for the iteration
  int max_iter = 1000;  // >= 1

  /// Throws InvalidParameter if any field is out of range.
  void validate() const;
};

/// An ordered, nonempty collection of intervals.
class Sample {
public:
  /// Throws InvalidInput on an empty collection.
  explicit Sample(std::vector<Interval> items);

  std::size_t size() const { return items_.size(); }
  const Interval& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Interval>& items() const { return items_; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

private:
  std::vector<Interval> items_;
};

/// Minkowski sum [inf K + inf K2, sup K + sup K2].
/// Throws ArithmeticOverflow when an endpoint leaves the finite range.
Interval add(const Interval& a, const Interval& b);

/// Scalar product: mid scales by gamma, spr by |gamma|.
Interval scale(double gamma, const Interval& k);

/// d_theta(K, K2) = sqrt((mid K - mid K2)^2 + theta * (spr K - spr K2)^2).
double d_theta(const Interval& a, const Interval& b, double theta);

/// Image of an interval under the isometry (mid, spr) -> (mid, sqrt(theta) * spr).
/// Euclidean distance between images equals d_theta of the preimages.
struct PlanePoint {
  double u = 0.0;       // mid coordinate
  double v = 0.0;       // sqrt(theta) * spr coordinate, >= 0
};

PlanePoint to_plane(const Interval& k, double theta);

}  // namespace irobust
