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

#include "irobust/interval.hpp"

#include <cmath>

#include "irobust/number_format.hpp"

namespace irobust {

Interval::Interval(double inf, double sup) : inf_(inf), sup_(sup) {
  if (!std::isfinite(inf) || !std::isfinite(sup)) {
    throw InvalidInput("interval endpoints must be finite");
  }
  if (inf > sup) {
    throw InvalidInput("interval requires inf <= sup, got [" + format_double(inf) + ", " +
                       format_double(sup) + "]");
  }
}

Interval Interval::from_mid_spr(double mid, double spr) {
  if (!std::isfinite(mid) || !std::isfinite(spr)) {
    throw InvalidInput("mid and spr must be finite");
  }
  if (spr < 0.0) {
    throw InvalidInput("spread must be nonnegative, got " + format_double(spr));
  }
  const double inf = mid - spr;
  const double sup = mid + spr;
  if (!std::isfinite(inf) || !std::isfinite(sup)) {
    throw ArithmeticOverflow("mid/spr combination overflows the endpoint range");
  }
  return Interval(inf, sup);
}

void ThetaConfig::validate() const {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw InvalidParameter("tol must be a finite positive real");
  }
  if (max_iter < 1) {
    throw InvalidParameter("max_iter must be >= 1");
  }
}

Sample::Sample(std::vector<Interval> items) : items_(std::move(items)) {
  if (items_.empty()) {
    throw InvalidInput("sample must contain at least one interval");
  }
}

Interval add(const Interval& a, const Interval& b) {
  const double inf = a.inf() + b.inf();
  const double sup = a.sup() + b.sup();
  if (!std::isfinite(inf) || !std::isfinite(sup)) {
    throw ArithmeticOverflow("interval addition overflowed");
  }
  return Interval(inf, sup);
}

Interval scale(double gamma, const Interval& k) {
  if (!std::isfinite(gamma)) {
    throw InvalidParameter("scale factor must be finite");
  }
  // Endpointwise product; the sign of gamma decides which endpoint lands where.
  const double lo = gamma >= 0.0 ? gamma * k.inf() : gamma * k.sup();
  const double hi = gamma >= 0.0 ? gamma * k.sup() : gamma * k.inf();
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ArithmeticOverflow("interval scaling overflowed");
  }
  return Interval(lo, hi);
}

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
}

}  // namespace

double d_theta(const Interval& a, const Interval& b, double theta) {
  check_theta(theta);
  const double dm = a.mid() - b.mid();
  const double ds = a.spr() - b.spr();
  return std::sqrt(dm * dm + theta * ds * ds);
}

PlanePoint to_plane(const Interval& k, double theta) {
  check_theta(theta);
  return PlanePoint{k.mid(), std::sqrt(theta) * k.spr()};
}

}  // namespace irobust
