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

#include "subcont/property_suite.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace subcont {
namespace {

constexpr double kNoViolation = -std::numeric_limits<double>::infinity();

struct TrialOutcome {
  double violation = kNoViolation;
  std::vector<Point> points;
  std::string description;
};

double Eval(const Objective& f, const Point& x) {
  const double value = f.Value(x);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << f.name() << ": non-finite value at [" << x.transpose() << "]";
    throw NumericalError(msg.str());
  }
  return value;
}

template <typename TrialFn>
PropertyReport RunTrials(const char* property, int trials, double tol,
                         std::uint64_t seed, TrialFn&& trial) {
  if (trials < 1) throw InvalidArgument(std::string(property) + ": trials must be >= 1");
  PropertyReport report;
  report.property = property;
  report.trials = trials;
  report.worst_violation = kNoViolation;
  TrialOutcome worst;
  for (int k = 0; k < trials; ++k) {
    std::mt19937_64 rng = StreamRng(seed, static_cast<std::uint64_t>(k));
    TrialOutcome outcome = trial(rng);
    if (outcome.violation > report.worst_violation) {
      report.worst_violation = outcome.violation;
      worst = std::move(outcome);
    }
  }
  if (report.worst_violation > tol) {
    report.verdict = Verdict::kFail;
    report.witness = std::move(worst.points);
    report.witness_description = std::move(worst.description);
  }
  return report;
}

double Unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform in (0, 1].
double UnitOpenLeft(std::mt19937_64& rng) { return 1.0 - Unit(rng); }

int PickCoordinate(int n, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

// Two uniform draws with coordinates tied with probability 1/2.
std::pair<Point, Point> TiedPair(const BoxDomain& box, std::mt19937_64& rng) {
  Point x = SampleUniform(box, rng);
  Point y = SampleUniform(box, rng);
  for (int i = 0; i < box.dimension(); ++i) {
    if (Unit(rng) < 0.5) y[i] = x[i];
  }
  return {std::move(x), std::move(y)};
}

// a <= b as meet and join of a tied pair.
std::pair<Point, Point> OrderedPair(const BoxDomain& box, std::mt19937_64& rng) {
  auto [x, y] = TiedPair(box, rng);
  LatticePair lp = LatticeOps(x, y);
  return {std::move(lp.meet), std::move(lp.join)};
}

void CheckDomain(const Objective& f, const BoxDomain& domain) {
  if (domain.dimension() != f.dimension()) {
    throw InvalidArgument(f.name() + ": domain dimension mismatch");
  }
}

// Shared body of the weak and full DR checks.
PropertyReport DiminishingReturns(const char* property, const Objective& f,
                                  const BoxDomain& domain, int trials,
                                  double tol, std::uint64_t seed, bool weak) {
  CheckDomain(f, domain);
  return RunTrials(property, trials, tol, seed, [&](std::mt19937_64& rng) {
    auto [a, b] = OrderedPair(domain, rng);
    const int i = PickCoordinate(domain.dimension(), rng);
    if (weak) {
      const double shared = domain.lower[i] +
                            Unit(rng) * (domain.upper[i] - domain.lower[i]);
      a[i] = shared;
      b[i] = shared;
    }
    const double room = domain.upper[i] - b[i];
    TrialOutcome out;
    if (!(room > 0.0)) return out;
    const double k = room * UnitOpenLeft(rng);
    Point ak = a;
    ak[i] += k;
    Point bk = b;
    bk[i] += k;
    const double gain_a = Eval(f, ak) - Eval(f, a);
    const double gain_b = Eval(f, bk) - Eval(f, b);
    out.violation = gain_b - gain_a;
    out.points = {a, b};
    std::ostringstream desc;
    desc << "a <= b, coordinate " << i << ", step " << k << ": gain at a "
         << gain_a << " < gain at b " << gain_b;
    out.description = desc.str();
    return out;
  });
}

}  // namespace

const char* VerdictName(Verdict v) {
  return v == Verdict::kPass ? "pass" : "fail";
}

PropertyReport CheckSubmodular(const Objective& f, const BoxDomain& domain,
                               int pairs, double tol, std::uint64_t seed) {
  CheckDomain(f, domain);
  return RunTrials("submodular", pairs, tol, seed, [&](std::mt19937_64& rng) {
    auto [x, y] = TiedPair(domain, rng);
    const LatticePair lp = LatticeOps(x, y);
    const double lhs = Eval(f, x) + Eval(f, y);
    const double rhs = Eval(f, lp.join) + Eval(f, lp.meet);
    TrialOutcome out;
    out.violation = rhs - lhs;
    out.points = {x, y};
    std::ostringstream desc;
    desc << "f(x) + f(y) = " << lhs << " < f(x v y) + f(x ^ y) = " << rhs;
    out.description = desc.str();
    return out;
  });
}

PropertyReport CheckWeakDr(const Objective& f, const BoxDomain& domain,
                           int trials, double tol, std::uint64_t seed) {
  return DiminishingReturns("weak-dr", f, domain, trials, tol, seed, true);
}

PropertyReport CheckDr(const Objective& f, const BoxDomain& domain, int trials,
                       double tol, std::uint64_t seed) {
  return DiminishingReturns("dr", f, domain, trials, tol, seed, false);
}

PropertyReport CheckCoordinatewiseConcave(const Objective& f,
                                          const BoxDomain& domain, int trials,
                                          double tol, std::uint64_t seed) {
  CheckDomain(f, domain);
  return RunTrials(
      "coordconcave", trials, tol, seed, [&](std::mt19937_64& rng) {
        const Point x = SampleUniform(domain, rng);
        const int i = PickCoordinate(domain.dimension(), rng);
        const double room = domain.upper[i] - x[i];
        TrialOutcome out;
        if (!(room > 0.0)) return out;
        const double k = 0.5 * room * UnitOpenLeft(rng);
        const double l = 0.5 * room * UnitOpenLeft(rng);
        Point xk = x, xl = x, xkl = x;
        xk[i] += k;
        xl[i] += l;
        xkl[i] += k + l;
        const double near = Eval(f, xk) - Eval(f, x);
        const double far = Eval(f, xkl) - Eval(f, xl);
        out.violation = far - near;
        out.points = {x};
        std::ostringstream desc;
        desc << "coordinate " << i << ", steps k=" << k << " l=" << l
             << ": increment " << near << " at x < increment " << far
             << " at x + l e_i";
        out.description = desc.str();
        return out;
      });
}

PropertyReport CheckMonotone(const Objective& f, const BoxDomain& domain,
                             int trials, double tol, std::uint64_t seed) {
  CheckDomain(f, domain);
  return RunTrials("monotone", trials, tol, seed, [&](std::mt19937_64& rng) {
    auto [a, b] = OrderedPair(domain, rng);
    const double fa = Eval(f, a);
    const double fb = Eval(f, b);
    TrialOutcome out;
    out.violation = fa - fb;
    out.points = {a, b};
    std::ostringstream desc;
    desc << "a <= b but f(a) = " << fa << " > f(b) = " << fb;
    out.description = desc.str();
    return out;
  });
}

PropertyReport CheckDirectionalConcave(const Objective& f, const Point& x,
                                       const Point& v, int gridpoints,
                                       double tol) {
  if (gridpoints < 2) {
    throw InvalidArgument("CheckDirectionalConcave: gridpoints must be >= 2");
  }
  if (x.size() != v.size()) {
    throw InvalidArgument("CheckDirectionalConcave: dimension mismatch");
  }
  if ((v.array() < 0.0).any()) {
    throw InvalidArgument("CheckDirectionalConcave: direction must be >= 0");
  }
  const auto along = [&](double s) { return Eval(f, Point(x + s * v)); };
  std::vector<double> grid(gridpoints);
  for (int g = 0; g < gridpoints; ++g) {
    grid[g] = along(static_cast<double>(g) / (gridpoints - 1));
  }
  PropertyReport report;
  report.property = "directional-concave";
  report.worst_violation = kNoViolation;
  double worst_s1 = 0.0, worst_s2 = 0.0;
  for (int g1 = 0; g1 < gridpoints; ++g1) {
    for (int g2 = g1 + 1; g2 < gridpoints; ++g2) {
      const double s1 = static_cast<double>(g1) / (gridpoints - 1);
      const double s2 = static_cast<double>(g2) / (gridpoints - 1);
      const double mid = along(0.5 * (s1 + s2));
      const double violation = 0.5 * (grid[g1] + grid[g2]) - mid;
      ++report.trials;
      if (violation > report.worst_violation) {
        report.worst_violation = violation;
        worst_s1 = s1;
        worst_s2 = s2;
      }
    }
  }
  if (report.worst_violation > tol) {
    report.verdict = Verdict::kFail;
    report.witness = {x, v};
    std::ostringstream desc;
    desc << "midpoint of s=" << worst_s1 << " and s=" << worst_s2
         << " lies below the chord by " << report.worst_violation;
    report.witness_description = desc.str();
  }
  return report;
}

Matrix MixedPartials(const Objective& f, const BoxDomain& domain,
                     const Point& x, double h) {
  CheckDomain(f, domain);
  if (!(h > 0.0)) throw InvalidArgument("MixedPartials: h must be > 0");
  const int n = f.dimension();
  if (x.size() != n) throw InvalidArgument("MixedPartials: dimension mismatch");
  for (int i = 0; i < n; ++i) {
    if (x[i] - h < domain.lower[i] || x[i] + h > domain.upper[i]) {
      std::ostringstream msg;
      msg << "MixedPartials: coordinate " << i
          << " is within the stencil step of the boundary";
      throw InvalidArgument(msg.str());
    }
  }
  Matrix out(n, n);
  const double center = Eval(f, x);
  Point p = x;
  for (int i = 0; i < n; ++i) {
    p[i] = x[i] + h;
    const double plus = Eval(f, p);
    p[i] = x[i] - h;
    const double minus = Eval(f, p);
    p[i] = x[i];
    out(i, i) = (plus - 2.0 * center + minus) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      double corners[2][2];
      for (int si = 0; si < 2; ++si) {
        for (int sj = 0; sj < 2; ++sj) {
          p[i] = x[i] + (si == 0 ? h : -h);
          p[j] = x[j] + (sj == 0 ? h : -h);
          corners[si][sj] = Eval(f, p);
        }
      }
      p[i] = x[i];
      p[j] = x[j];
      const double mixed = (corners[0][0] - corners[0][1] - corners[1][0] +
                            corners[1][1]) /
                           (4.0 * h * h);
      out(i, j) = mixed;
      out(j, i) = mixed;
    }
  }
  return out;
}

PropertyReport CheckHessianOffdiag(const Objective& f, const BoxDomain& domain,
                                   const Point& x, double h, double tol) {
  const Matrix partials = MixedPartials(f, domain, x, h);
  PropertyReport report;
  report.property = "hessian-offdiag";
  report.worst_violation = kNoViolation;
  int wi = 0, wj = 0;
  for (int i = 0; i < partials.rows(); ++i) {
    for (int j = 0; j < partials.cols(); ++j) {
      if (i == j) continue;
      ++report.trials;
      if (partials(i, j) > report.worst_violation) {
        report.worst_violation = partials(i, j);
        wi = i;
        wj = j;
      }
    }
  }
  if (report.trials == 0) report.worst_violation = 0.0;
  if (report.worst_violation > tol) {
    report.verdict = Verdict::kFail;
    report.witness = {x};
    std::ostringstream desc;
    desc << "d2f/dx" << wi << "dx" << wj << " = " << report.worst_violation
         << " > 0";
    report.witness_description = desc.str();
  }
  return report;
}

PropertyReport CheckGradient(const Objective& f, const Point& x, double h,
                             double rel_tol) {
  if (!f.has_gradient()) {
    throw InvalidArgument(f.name() + ": no declared gradient to check");
  }
  const Point declared = f.Gradient(x);
  const Point numeric = FiniteDiffGradient(f, x, h);
  PropertyReport report;
  report.property = "gradient";
  report.trials = static_cast<int>(x.size());
  report.worst_violation = 0.0;
  int worst = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double scale =
        std::max({1.0, std::abs(declared[i]), std::abs(numeric[i])});
    const double err = std::abs(declared[i] - numeric[i]) / scale;
    if (!(err <= report.worst_violation)) {
      report.worst_violation = err;
      worst = static_cast<int>(i);
    }
  }
  if (!(report.worst_violation <= rel_tol)) {
    report.verdict = Verdict::kFail;
    report.witness = {x};
    report.witness_coordinate = worst;
    std::ostringstream desc;
    desc << "coordinate " << worst << ": declared " << declared[worst]
         << " vs finite difference " << numeric[worst];
    report.witness_description = desc.str();
  }
  return report;
}

}  // namespace subcont
