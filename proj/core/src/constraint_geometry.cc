// Copyright 2026 The Subcont Authors.
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

#include "subcont/constraint_geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace subcont {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

void RequireDimension(const PolytopeDomain& P, const Point& x,
                      const char* who) {
  if (x.size() != P.dimension()) {
    std::ostringstream msg;
    msg << who << ": expected dimension " << P.dimension() << ", got "
        << x.size();
    throw InvalidArgument(msg.str());
  }
}

// Dense tableau for max c'x s.t. [A; I] x <= [b; u], x >= 0.
class Tableau {
 public:
  Tableau(const PolytopeDomain& P, const Point& c)
      : n_(P.dimension()), m_(P.rows()), rows_(m_ + n_),
        table_(RowMatrix::Zero(rows_ + 1, n_ + rows_ + 1)),
        basic_(rows_) {
    const int rhs = n_ + rows_;
    for (int r = 0; r < m_; ++r) {
      table_.row(r).head(n_) = P.A.row(r);
      table_(r, rhs) = P.b[r];
    }
    for (int j = 0; j < n_; ++j) {
      table_(m_ + j, j) = 1.0;
      table_(m_ + j, rhs) = P.upper[j];
    }
    for (int r = 0; r < rows_; ++r) {
      table_(r, n_ + r) = 1.0;
      basic_[r] = n_ + r;
    }
    table_.row(rows_).head(n_) = -c.transpose();
    cost_eps_ = 1e-12 * std::max(1.0, c.cwiseAbs().maxCoeff());
  }

  // Runs Bland's rule to optimality.
  void Solve() {
    const int max_pivots = 50 * (rows_ + n_) + 1000;
    for (int pivots = 0;; ++pivots) {
      const int enter = EnteringColumn();
      if (enter < 0) return;
      if (pivots >= max_pivots) {
        throw LPError("LinearMaximize: pivot limit exceeded", ActiveSet());
      }
      const int leave = LeavingRow(enter);
      if (leave < 0) {
        // Cannot happen for a bounded P; kept as a hard error.
        throw LPError("LinearMaximize: unbounded direction", ActiveSet());
      }
      Pivot(leave, enter);
    }
  }

  Point Solution() const {
    Point x = Point::Zero(n_);
    const int rhs = n_ + rows_;
    for (int r = 0; r < rows_; ++r) {
      if (basic_[r] < n_) x[basic_[r]] = std::max(0.0, table_(r, rhs));
    }
    return x;
  }

  // Nonbasic variables, translated to constraint indices.
  std::vector<int> ActiveSet() const {
    std::vector<bool> is_basic(n_ + rows_, false);
    for (int v : basic_) is_basic[v] = true;
    std::vector<int> active;
    for (int v = 0; v < n_ + rows_; ++v) {
      if (is_basic[v]) continue;
      // Structural x_j at zero -> lower bound; slack of row r at zero -> row r.
      active.push_back(v < n_ ? m_ + n_ + v : v - n_);
    }
    std::sort(active.begin(), active.end());
    return active;
  }

 private:
  int EnteringColumn() const {
    for (int j = 0; j < n_ + rows_; ++j) {
      if (table_(rows_, j) < -cost_eps_) return j;
    }
    return -1;
  }

  int LeavingRow(int enter) const {
    const int rhs = n_ + rows_;
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < rows_; ++r) {
      const double a = table_(r, enter);
      if (a <= kPivotEps) continue;
      const double ratio = std::max(0.0, table_(r, rhs)) / a;
      if (ratio < best_ratio ||
          (ratio == best_ratio && basic_[r] < basic_[best])) {
        best_ratio = ratio;
        best = r;
      }
    }
    return best;
  }

  void Pivot(int leave, int enter) {
    table_.row(leave) /= table_(leave, enter);
    for (int r = 0; r <= rows_; ++r) {
      if (r == leave) continue;
      const double factor = table_(r, enter);
      if (factor != 0.0) table_.row(r) -= factor * table_.row(leave);
    }
    basic_[leave] = enter;
  }

  static constexpr double kPivotEps = 1e-12;

  int n_;
  int m_;
  int rows_;
  RowMatrix table_;
  std::vector<int> basic_;
  double cost_eps_ = 1e-12;
};

}  // namespace

bool Contains(const PolytopeDomain& P, const Point& x, double tol) {
  if (x.size() != P.dimension() || !AllFinite(x)) return false;
  return FeasibilityResidual(P, x) <= tol;
}

double FeasibilityResidual(const PolytopeDomain& P, const Point& x) {
  RequireDimension(P, x, "FeasibilityResidual");
  double worst = 0.0;
  for (int j = 0; j < P.dimension(); ++j) {
    worst = std::max({worst, -x[j], x[j] - P.upper[j]});
  }
  if (P.rows() > 0) {
    const Point slack = P.A * x - P.b;
    worst = std::max(worst, slack.maxCoeff());
  }
  return worst;
}

LPSolution LinearMaximize(const PolytopeDomain& P, const Point& c) {
  RequireDimension(P, c, "LinearMaximize");
  if (!AllFinite(c)) throw InvalidArgument("LinearMaximize: c must be finite");
  Tableau tableau(P, c);
  tableau.Solve();
  LPSolution out;
  out.point = tableau.Solution();
  out.objective = c.dot(out.point);
  out.basis = tableau.ActiveSet();
  return out;
}

std::vector<Point> EnumerateVertices(const PolytopeDomain& P) {
  const int n = P.dimension();
  const int m = P.rows();
  if (n > 10 || m > 10) {
    throw InvalidArgument("EnumerateVertices: requires n <= 10 and m <= 10");
  }
  const int total = m + 2 * n;
  Matrix rows(total, n);
  Point rhs(total);
  rows.setZero();
  for (int r = 0; r < m; ++r) {
    rows.row(r) = P.A.row(r);
    rhs[r] = P.b[r];
  }
  for (int j = 0; j < n; ++j) {
    rows(m + j, j) = 1.0;
    rhs[m + j] = P.upper[j];
    rows(m + n + j, j) = 1.0;
    rhs[m + n + j] = 0.0;
  }

  std::vector<Point> vertices;
  std::vector<bool> chosen(total, false);
  std::fill(chosen.begin(), chosen.begin() + n, true);
  Matrix system(n, n);
  Point target(n);
  do {
    int k = 0;
    for (int r = 0; r < total; ++r) {
      if (!chosen[r]) continue;
      system.row(k) = rows.row(r);
      target[k] = rhs[r];
      ++k;
    }
    Eigen::FullPivLU<Matrix> lu(system);
    if (lu.rank() < n) continue;
    const Point x = lu.solve(target);
    if (!Contains(P, x, kFeasibilityTolerance)) continue;
    const bool duplicate = std::any_of(
        vertices.begin(), vertices.end(), [&](const Point& v) {
          return (v - x).cwiseAbs().maxCoeff() <= kFeasibilityTolerance;
        });
    if (!duplicate) vertices.push_back(x);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return vertices;
}

Point ProjectPolytope(const PolytopeDomain& P, const Point& x, double tol,
                      int max_iter) {
  RequireDimension(P, x, "ProjectPolytope");
  if (!AllFinite(x)) throw InvalidArgument("ProjectPolytope: x must be finite");
  const int m = P.rows();
  const BoxDomain box = P.BoundingBox();
  Point current = x;
  // Dykstra correction terms, one per set: box first, then each half-space.
  Point box_increment = Point::Zero(x.size());
  Matrix row_increments = Matrix::Zero(x.size(), m);
  Point row_norms_sq(m);
  for (int r = 0; r < m; ++r) row_norms_sq[r] = P.A.row(r).squaredNorm();

  double change = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < max_iter; ++sweep) {
    const Point start = current;

    Point shifted = current + box_increment;
    current = box.Clamp(shifted);
    box_increment = shifted - current;

    for (int r = 0; r < m; ++r) {
      shifted = current + row_increments.col(r);
      const double excess = P.A.row(r).dot(shifted) - P.b[r];
      if (excess > 0.0 && row_norms_sq[r] > 0.0) {
        current = shifted - (excess / row_norms_sq[r]) * P.A.row(r).transpose();
      } else {
        current = shifted;
      }
      row_increments.col(r) = shifted - current;
    }

    change = (current - start).cwiseAbs().maxCoeff();
    if (change <= 0.1 * tol) {
      // A >= 0, so clamping the last half-space pass into the box can only
      // lower A x; it removes the tiny box excursions Dykstra leaves.
      current = box.Clamp(current);
      residual = FeasibilityResidual(P, current);
      if (residual <= tol) return current;
    }
  }
  residual = FeasibilityResidual(P, current);
  std::ostringstream msg;
  msg << "ProjectPolytope: no convergence after " << max_iter
      << " sweeps (last change " << change << ", residual " << residual << ")";
  throw ProjectionError(msg.str(), std::max(change, residual));
}

std::vector<Point> HitAndRun(const PolytopeDomain& P, int k, std::uint64_t seed,
                             const HitAndRunOptions& options) {
  if (k < 1) throw InvalidArgument("HitAndRun: k must be >= 1");
  const int n = P.dimension();
  const int m = P.rows();
  const int burn_in = options.burn_in >= 0 ? options.burn_in : 50 * n;
  const int thinning = options.thinning >= 1 ? options.thinning : n;

  std::mt19937_64 rng = StreamRng(seed, 0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Point x = Point::Zero(n);
  Point ax = Point::Zero(m);  // A x at the current state
  Point d(n);
  Point ad(m);

  // Feasible step interval [lo, hi] along d from x.
  const auto chord = [&](double& lo, double& hi) {
    lo = -std::numeric_limits<double>::infinity();
    hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      const double to_upper = std::max(0.0, P.upper[j] - x[j]);
      const double to_lower = std::max(0.0, x[j]);
      if (d[j] > 0.0) {
        hi = std::min(hi, to_upper / d[j]);
        lo = std::max(lo, -to_lower / d[j]);
      } else if (d[j] < 0.0) {
        hi = std::min(hi, to_lower / -d[j]);
        lo = std::max(lo, to_upper / d[j]);
      }
    }
    if (m > 0) ad.noalias() = P.A * d;
    for (int r = 0; r < m; ++r) {
      const double slack = std::max(0.0, P.b[r] - ax[r]);
      if (ad[r] > 0.0) {
        hi = std::min(hi, slack / ad[r]);
      } else if (ad[r] < 0.0) {
        lo = std::max(lo, slack / ad[r]);
      }
    }
  };

  const auto step = [&]() {
    double lo = 0.0, hi = 0.0;
    bool moved = false;
    for (int attempt = 0; attempt <= options.max_direction_retries + 2;
         ++attempt) {
      for (int j = 0; j < n; ++j) d[j] = normal(rng);
      // After the retries, fold the direction into the non-negative or
      // non-positive orthant; from any point of a down-closed set one of the
      // two has a non-degenerate chord unless the set is a single point.
      if (attempt > options.max_direction_retries) {
        d = d.cwiseAbs();
        if (attempt == options.max_direction_retries + 2) d = -d;
      }
      const double norm = d.norm();
      if (!(norm > 0.0)) continue;
      d /= norm;
      chord(lo, hi);
      if (hi - lo > 1e-14) {
        moved = true;
        break;
      }
    }
    if (!moved) return;
    const double lambda = lo + unit(rng) * (hi - lo);
    x += lambda * d;
    x = x.cwiseMax(0.0).cwiseMin(P.upper);
    if (m > 0) ax.noalias() = P.A * x;
  };

  for (int s = 0; s < burn_in; ++s) step();
  std::vector<Point> samples;
  samples.reserve(k);
  for (int i = 0; i < k; ++i) {
    for (int s = 0; s < thinning; ++s) step();
    samples.push_back(x);
  }
  return samples;
}

Point RatioShrink(const PolytopeDomain& P, const Point& x) {
  RequireDimension(P, x, "RatioShrink");
  if ((x.array() < 0.0).any() || !AllFinite(x)) {
    throw InvalidArgument("RatioShrink: x must be finite and non-negative");
  }
  const Point clamped = x.cwiseMin(P.upper);
  double scale = 1.0;
  if (P.rows() > 0) {
    const Point load = P.A * clamped;
    for (int r = 0; r < P.rows(); ++r) {
      if (load[r] > 0.0) scale = std::min(scale, P.b[r] / load[r]);
    }
  }
  return scale * clamped;
}

}  // namespace subcont
