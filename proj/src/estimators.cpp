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

#include "irobust/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

namespace irobust {

namespace {

double median_of(std::vector<double> v) {
  const std::size_t n = v.size();
  const std::size_t h = n / 2;
  std::nth_element(v.begin(), v.begin() + h, v.end());
  if (n % 2 == 1) {
    return v[h];
  }
  const double hi = v[h];
  std::nth_element(v.begin(), v.begin() + h - 1, v.end());
  return v[h - 1] / 2 + hi / 2;
}

struct P2 {
  double x = 0.0;
  double y = 0.0;
};

double dist(P2 a, P2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

double norm(P2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

double objective_at(const std::vector<P2>& pts, P2 q) {
  double sum = 0.0;
  for (const P2& p : pts) sum += dist(p, q);
  return sum / static_cast<double>(pts.size());
}

}  // namespace

Interval aumann_mean(const Sample& sample) {
  double inf_sum = 0.0;
  double sup_sum = 0.0;
  for (const Interval& k : sample) {
    inf_sum += k.inf();
    sup_sum += k.sup();
  }
  const double n = static_cast<double>(sample.size());
  return Interval(inf_sum / n, sup_sum / n);
}

double objective(const Sample& sample, const Interval& k, double theta) {
  double sum = 0.0;
  for (const Interval& x : sample) sum += d_theta(x, k, theta);
  return sum / static_cast<double>(sample.size());
}

double squared_objective(const Sample& sample, const Interval& k, double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
  double sum = 0.0;
  for (const Interval& x : sample) {
    const double dm = x.mid() - k.mid();
    const double ds = x.spr() - k.spr();
    sum += dm * dm + theta * ds * ds;
  }
  return sum / static_cast<double>(sample.size());
}

bool collinearity_check(const Sample& sample, double theta) {
  const std::size_t n = sample.size();
  if (n <= 2) return false;

  double mu = 0.0, mv = 0.0;
  std::vector<PlanePoint> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts[i] = to_plane(sample[i], theta);
    mu += pts[i].u;
    mv += pts[i].v;
  }
  mu /= static_cast<double>(n);
  mv /= static_cast<double>(n);

  // Scatter matrix of the centered points; its eigenvalues are the squared
  // singular values of the centered 2 x n coordinate matrix.
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const PlanePoint& p : pts) {
    const double du = p.u - mu;
    const double dv = p.v - mv;
    sxx += du * du;
    sxy += du * dv;
    syy += dv * dv;
  }
  const double tr = sxx + syy;
  if (!(tr > 0.0)) return false;  // all points identical
  const double det = std::max(0.0, sxx * syy - sxy * sxy);
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  const double lam1 = (tr + disc) / 2.0;
  const double lam2 = det / lam1;  // stable form of (tr - disc) / 2
  // sigma_min / sigma_max > 1e-12  <=>  lam2 / lam1 > 1e-24
  return lam2 > 1e-24 * lam1;
}

Rational fsbp(long long n) {
  if (n < 1) throw InvalidInput("fsbp requires n >= 1");
  long long num = (n + 1) / 2;
  long long den = n;
  const long long g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

EstimateReport dtheta_median(const Sample& sample, const ThetaConfig& cfg,
                             IterationTrace* trace) {
  cfg.validate();
  const std::size_t n = sample.size();
  const double root_theta = std::sqrt(cfg.theta);

  std::vector<P2> pts(n);
  std::vector<double> us(n), vs(n);
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint p = to_plane(sample[i], cfg.theta);
    pts[i] = P2{p.u, p.v};
    us[i] = p.u;
    vs[i] = p.v;
    xmin = std::min(xmin, p.u);
    xmax = std::max(xmax, p.u);
    ymin = std::min(ymin, p.v);
    ymax = std::max(ymax, p.v);
  }
  const double diag = std::sqrt((xmax - xmin) * (xmax - xmin) + (ymax - ymin) * (ymax - ymin));
  if (!std::isfinite(diag)) {
    throw NumericFailure("transformed data span overflows the double range", 0);
  }
  const double coincide_tol = 1e-13 * diag;

  // Componentwise median start: cheap, robust, inside the bounding box.
  P2 x{median_of(us), median_of(vs)};

  auto record = [&](P2 q) {
    if (trace) {
      trace->iterates.push_back(PlanePoint{q.x, q.y});
      trace->objectives.push_back(objective_at(pts, q));
    }
  };
  record(x);

  int iterations = 0;
  bool converged = false;
  double final_step = 0.0;
  std::vector<double> d(n);

  while (iterations < cfg.max_iter) {
    std::size_t nearest = 0;
    double dmin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = dist(pts[i], x);
      if (d[i] < dmin) {
        dmin = d[i];
        nearest = i;
      }
    }

    P2 next;
    if (dmin <= coincide_tol) {
      // Vardi-Zhang correction at a data site. eta counts the coincident
      // observations; R is the pull of the remaining ones.
      double eta = 0.0;
      double rx = 0.0, ry = 0.0;
      double wsum = 0.0, tx = 0.0, ty = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (d[i] <= coincide_tol) {
          eta += 1.0;
          continue;
        }
        const double w = 1.0 / d[i];
        rx += (pts[i].x - x.x) * w;
        ry += (pts[i].y - x.y) * w;
        tx += pts[i].x * w;
        ty += pts[i].y * w;
        wsum += w;
      }
      const double rnorm = std::sqrt(rx * rx + ry * ry);
      if (!(rnorm > eta)) {
        // Subgradient norm test: the data site is optimal. Snap exactly.
        x = pts[nearest];
        converged = true;
        final_step = 0.0;
        record(x);
        break;
      }
      const P2 t{tx / wsum, ty / wsum};
      const double lambda = eta / rnorm;  // < 1 here
      next = P2{(1.0 - lambda) * t.x + lambda * x.x, (1.0 - lambda) * t.y + lambda * x.y};
    } else {
      // Plain Weiszfeld reweighting.
      double wsum = 0.0, tx = 0.0, ty = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double w = 1.0 / d[i];
        tx += pts[i].x * w;
        ty += pts[i].y * w;
        wsum += w;
      }
      next = P2{tx / wsum, ty / wsum};
    }

    if (!std::isfinite(next.x) || !std::isfinite(next.y)) {
      throw NumericFailure("d_theta median iteration produced a non-finite iterate",
                           static_cast<std::size_t>(iterations));
    }
    const double step = dist(next, x);
    x = next;
    ++iterations;
    record(x);
    final_step = step / (1.0 + norm(x));  // scale-aware, comparable with tol
    if (final_step <= cfg.tol) {
      converged = true;
      break;
    }
  }

  // v >= 0 can only be violated by round-off; the iterates are convex
  // combinations of points with v >= 0.
  if (x.y < 0.0) {
    if (x.y < -1e-12 * (1.0 + diag)) {
      throw NumericFailure("spread coordinate left the feasible half-plane",
                           static_cast<std::size_t>(iterations));
    }
    x.y = 0.0;
  }

  EstimateReport rep;
  rep.estimate = Interval::from_mid_spr(x.x, x.y / root_theta);
  rep.objective = objective(sample, rep.estimate, cfg.theta);
  rep.iterations = iterations;
  rep.converged = converged;
  rep.unique = collinearity_check(sample, cfg.theta);
  rep.final_step = final_step;
  if (!std::isfinite(rep.objective)) {
    throw NumericFailure("objective at the estimate is non-finite",
                         static_cast<std::size_t>(iterations));
  }
  return rep;
}

Interval brute_force_median(const Sample& sample, double theta, const GridBounds& bounds,
                            double step) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw InvalidParameter("theta must be a finite positive real");
  }
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw InvalidParameter("grid step must be a finite positive real");
  }
  if (!(bounds.mid_lo <= bounds.mid_hi) || !(bounds.spr_lo <= bounds.spr_hi)) {
    throw InvalidInput("grid bounds are empty");
  }

  const std::size_t n = sample.size();
  std::vector<double> mids(n), sprs(n);
  for (std::size_t i = 0; i < n; ++i) {
    mids[i] = sample[i].mid();
    sprs[i] = sample[i].spr();
  }

  // Node lattices anchored at the lower bounds; the spr lattice is
  // intersected with [0, inf).
  const double count_slack = 1e-9;
  const long ny = static_cast<long>(std::floor((bounds.mid_hi - bounds.mid_lo) / step + count_slack)) + 1;
  long jz_begin = 0;
  if (bounds.spr_lo < 0.0) {
    jz_begin = static_cast<long>(std::ceil(-bounds.spr_lo / step - count_slack));
  }
  const long nz = static_cast<long>(std::floor((bounds.spr_hi - bounds.spr_lo) / step + count_slack)) + 1;
  if (ny < 1 || jz_begin >= nz) {
    throw InvalidInput("grid is empty after intersecting with spr >= 0");
  }

  double best = std::numeric_limits<double>::infinity();
  double best_y = bounds.mid_lo;
  double best_z = std::max(0.0, bounds.spr_lo);
  for (long jy = 0; jy < ny; ++jy) {
    const double y = bounds.mid_lo + static_cast<double>(jy) * step;
    for (long jz = jz_begin; jz < nz; ++jz) {
      const double z = bounds.spr_lo + static_cast<double>(jz) * step;
      double sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double dm = mids[i] - y;
        const double ds = sprs[i] - z;
        sum += std::sqrt(dm * dm + theta * ds * ds);
      }
      const double f = sum / static_cast<double>(n);
      // Strict improvement keeps the first minimizer: smallest mid wins,
      // then smallest spr.
      if (f < best) {
        best = f;
        best_y = y;
        best_z = z;
      }
    }
  }
  return Interval::from_mid_spr(best_y, std::max(0.0, best_z));
}

GridBounds inflated_bounds(const Sample& sample) {
  double mlo = std::numeric_limits<double>::infinity(), mhi = -mlo;
  double slo = mlo, shi = -mlo;
  for (const Interval& k : sample) {
    mlo = std::min(mlo, k.mid());
    mhi = std::max(mhi, k.mid());
    slo = std::min(slo, k.spr());
    shi = std::max(shi, k.spr());
  }
  const double diag = std::sqrt((mhi - mlo) * (mhi - mlo) + (shi - slo) * (shi - slo));
  return GridBounds{mlo - diag, mhi + diag, std::max(0.0, slo - diag), shi + diag};
}

}  // namespace irobust
