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

#include "subcont/solvers.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace subcont {
namespace {

// Restriction of f to coordinate j through x.
class CoordinateSlice {
 public:
  CoordinateSlice(const Objective& f, const Point& x, int j)
      : f_(f), probe_(x), j_(j) {}

  double operator()(double z) {
    probe_[j_] = z;
    const double value = f_.Value(probe_);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "Maximize1d: non-finite value of " << f_.name()
          << " at coordinate " << j_ << " = " << z;
      throw NumericalError(msg.str());
    }
    return value;
  }

 private:
  const Objective& f_;
  Point probe_;
  int j_;
};

struct Sample {
  double z;
  double value;
};

// Upper bound on max over [z_0, z_last] of a concave function through the
// sorted samples: between neighbours the function lies below the secants of
// the adjacent intervals extended inward.
double ConcaveUpperBound(const std::vector<Sample>& s) {
  double bound = -std::numeric_limits<double>::infinity();
  for (const Sample& p : s) bound = std::max(bound, p.value);
  const auto slope = [&](std::size_t i) {
    return (s[i + 1].value - s[i].value) / (s[i + 1].z - s[i].z);
  };
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    const double z0 = s[i].z;
    const double z1 = s[i + 1].z;
    const bool has_left = i >= 1;
    const bool has_right = i + 2 < s.size();
    if (!has_left && !has_right) continue;
    const auto left = [&](double z) { return s[i].value + slope(i - 1) * (z - z0); };
    const auto right = [&](double z) {
      return s[i + 1].value + slope(i + 1) * (z - z1);
    };
    const auto envelope = [&](double z) {
      if (has_left && has_right) return std::min(left(z), right(z));
      return has_left ? left(z) : right(z);
    };
    double best = std::max(envelope(z0), envelope(z1));
    if (has_left && has_right) {
      const double sl = slope(i - 1);
      const double sr = slope(i + 1);
      if (sl != sr) {
        const double zc =
            (s[i + 1].value - s[i].value + sl * z0 - sr * z1) / (sl - sr);
        if (zc > z0 && zc < z1) best = std::max(best, envelope(zc));
      }
    }
    bound = std::max(bound, best);
  }
  return bound;
}

Maximize1dResult BestOf(std::vector<Sample> samples, bool concave_gap) {
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.z < b.z; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const Sample& a, const Sample& b) {
                              return a.z == b.z;
                            }),
                samples.end());
  Maximize1dResult out;
  out.value = -std::numeric_limits<double>::infinity();
  for (const Sample& s : samples) {
    if (s.value > out.value) {
      out.value = s.value;
      out.z_star = s.z;
    }
  }
  if (concave_gap && samples.size() >= 3) {
    out.gap_bound = std::max(0.0, ConcaveUpperBound(samples) - out.value);
  }
  return out;
}

// Golden-section search for the max of a concave slice on [lo, hi]. Returns
// every evaluated sample, including both ends of the final bracket and of the
// original interval.
std::vector<Sample> GoldenSection(CoordinateSlice& phi, double lo, double hi,
                                  double tol) {
  std::vector<Sample> seen;
  seen.push_back({lo, phi(lo)});
  if (hi <= lo) return seen;
  seen.push_back({hi, phi(hi)});
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = phi(c);
  double fd = phi(d);
  seen.push_back({c, fc});
  seen.push_back({d, fd});
  for (int iter = 0; iter < 400 && b - a > tol; ++iter) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = phi(d);
      seen.push_back({d, fd});
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = phi(c);
      seen.push_back({c, fc});
    }
  }
  seen.push_back({a, phi(a)});
  seen.push_back({b, phi(b)});
  seen.push_back({0.5 * (a + b), phi(0.5 * (a + b))});
  return seen;
}

void RequireSubmodularBox(const Objective& f, const BoxDomain& box,
                          const char* who) {
  if (box.dimension() != f.dimension()) {
    throw InvalidArgument(std::string(who) + ": box dimension mismatch");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Frank-Wolfe variant.

LinearOracle ScaledOracle(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("ScaledOracle: alpha must lie in (0, 1]");
  }
  return [alpha](const PolytopeDomain& P, const Point& c) {
    LPSolution exact = LinearMaximize(P, c);
    exact.point *= alpha;
    exact.objective *= alpha;
    return exact;
  };
}

int FWConfig::iterations() const {
  if (!schedule.empty()) return static_cast<int>(schedule.size());
  return static_cast<int>(std::ceil(1.0 / gamma - 1e-9));
}

void FWConfig::Validate() const {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InvalidArgument("FWConfig: gamma must lie in (0, 1]");
  }
  if (1.0 / gamma > 1e7) throw InvalidArgument("FWConfig: gamma too small");
  for (double g : schedule) {
    if (!(g > 0.0 && g <= 1.0)) {
      throw InvalidArgument("FWConfig: schedule entries must lie in (0, 1]");
    }
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("FWConfig: alpha must lie in (0, 1]");
  }
  if (!(delta >= 0.0)) throw InvalidArgument("FWConfig: delta must be >= 0");
  if (!(L > 0.0)) throw InvalidArgument("FWConfig: L must be > 0");
}

FWResult FrankWolfeVariant(const Objective& f, const PolytopeDomain& P,
                           const FWConfig& config) {
  config.Validate();
  const ObjectiveFlags& flags = f.flags();
  if (!flags.monotone || !flags.dr_submodular || !f.has_gradient()) {
    throw InvalidArgument(
        "FrankWolfeVariant: objective must be monotone, DR-submodular and "
        "differentiable");
  }
  if (P.dimension() != f.dimension()) {
    throw InvalidArgument("FrankWolfeVariant: polytope dimension mismatch");
  }
  const LinearOracle oracle =
      config.oracle ? config.oracle : LinearOracle(LinearMaximize);

  FWResult result;
  Point x = Point::Zero(f.dimension());
  double t = 0.0;
  int k = 0;
  result.trace.Append({0, 0.0, f.Value(x), FeasibilityResidual(P, x)});

  // Guards against a schedule that never reaches t = 1.
  const int max_iterations = std::max(config.iterations(), 1) * 4 + 16;
  while (t < 1.0) {
    if (k >= max_iterations) {
      throw SolverError("FrankWolfeVariant: step sizes did not sum to one",
                        result.trace);
    }
    const Point grad = f.Gradient(x);
    if (!AllFinite(grad)) {
      std::ostringstream msg;
      msg << "FrankWolfeVariant: non-finite gradient at iteration " << k;
      throw SolverError(msg.str(), result.trace);
    }
    LPSolution v = oracle(P, grad);

    double step = config.schedule.empty()
                      ? config.gamma
                      : config.schedule[std::min<std::size_t>(
                            k, config.schedule.size() - 1)];
    const double remaining = 1.0 - t;
    step = std::min(step, remaining);
    // Absorb a rounding-sized remainder into this step so t lands on 1.
    const bool last = remaining - step <= 1e-12;
    if (last) step = remaining;

    x += step * v.point;
    t = last ? 1.0 : t + step;
    ++k;
    result.steps.push_back(step);

    const double value = f.Value(x);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "FrankWolfeVariant: non-finite objective at iteration " << k;
      throw SolverError(msg.str(), result.trace);
    }
    const double residual = FeasibilityResidual(P, x);
    result.max_feasibility_residual =
        std::max(result.max_feasibility_residual, residual);
    result.trace.Append({k, t, value, residual});
  }
  result.x = std::move(x);
  result.step_sum = std::accumulate(result.steps.begin(), result.steps.end(), 0.0);
  return result;
}

double FrankWolfeGuarantee(double f_star, double f_zero,
                           const std::vector<double>& steps, double alpha,
                           double delta, double L) {
  double sum_sq = 0.0;
  for (double g : steps) sum_sq += g * g;
  const double decay = std::exp(-alpha);
  return (1.0 - decay) * f_star - 0.5 * L * sum_sq - 0.5 * L * delta +
         decay * f_zero;
}

// ---------------------------------------------------------------------------
// One-dimensional maximization.

const char* OneDimModeName(OneDimMode mode) {
  switch (mode) {
    case OneDimMode::kQuadraticClosedForm:
      return "quadratic";
    case OneDimMode::kConcaveSearch:
      return "concave";
    case OneDimMode::kRevenueDiscontinuous:
      return "revenue";
  }
  return "unknown";
}

OneDimMode ParseOneDimMode(const std::string& name) {
  if (name == "quadratic") return OneDimMode::kQuadraticClosedForm;
  if (name == "concave") return OneDimMode::kConcaveSearch;
  if (name == "revenue") return OneDimMode::kRevenueDiscontinuous;
  throw InvalidArgument("unknown 1-D mode '" + name + "'");
}

std::pair<double, double> QuadraticArgmax(double a, double b, double lo,
                                          double hi) {
  if (!(lo <= hi)) throw InvalidArgument("QuadraticArgmax: lo > hi");
  const auto q = [&](double z) { return a * z * z + b * z; };
  double best_z = lo;
  double best = q(lo);
  if (q(hi) > best) {
    best_z = hi;
    best = q(hi);
  }
  if (a < 0.0) {
    const double stationary = -b / (2.0 * a);
    if (stationary > lo && stationary < hi && q(stationary) > best) {
      best_z = stationary;
      best = q(stationary);
    }
  }
  return {best_z, best};
}

Maximize1dResult Maximize1d(const Objective& f, const Point& x, int j,
                            double lo, double hi, OneDimMode mode, double tol) {
  if (j < 0 || j >= f.dimension() || x.size() != f.dimension()) {
    throw InvalidArgument("Maximize1d: coordinate or dimension out of range");
  }
  if (!(lo <= hi)) throw InvalidArgument("Maximize1d: lo > hi");
  if (!(tol > 0.0)) throw InvalidArgument("Maximize1d: tol must be > 0");
  CoordinateSlice phi(f, x, j);

  switch (mode) {
    case OneDimMode::kQuadraticClosedForm: {
      std::vector<Sample> samples{{lo, phi(lo)}};
      if (hi > lo) {
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        const double f_lo = samples.front().value;
        const double f_mid = phi(mid);
        const double f_hi = phi(hi);
        samples.push_back({mid, f_mid});
        samples.push_back({hi, f_hi});
        // phi(mid + s) = f_mid + slope s + curvature s^2.
        const double curvature = (f_lo - 2.0 * f_mid + f_hi) / (2.0 * half * half);
        const double slope = (f_hi - f_lo) / (2.0 * half);
        const auto [s_star, unused] =
            QuadraticArgmax(curvature, slope, -half, half);
        (void)unused;
        const double z = std::clamp(mid + s_star, lo, hi);
        samples.push_back({z, phi(z)});
      }
      return BestOf(std::move(samples), /*concave_gap=*/false);
    }
    case OneDimMode::kConcaveSearch:
      return BestOf(GoldenSection(phi, lo, hi, tol), /*concave_gap=*/true);
    case OneDimMode::kRevenueDiscontinuous: {
      if (lo > 0.0 || hi <= 0.0) {
        return BestOf(GoldenSection(phi, lo, hi, tol), /*concave_gap=*/true);
      }
      const double start = std::min(hi, kRevenueProbeEpsilon);
      Maximize1dResult smooth =
          BestOf(GoldenSection(phi, start, hi, tol), /*concave_gap=*/true);
      const double at_zero = phi(0.0);
      if (at_zero > smooth.value) {
        smooth.z_star = 0.0;
        smooth.value = at_zero;
      }
      return smooth;
    }
  }
  throw InvalidArgument("Maximize1d: unknown mode");
}

// ---------------------------------------------------------------------------
// DoubleGreedy.

std::vector<int> NaturalOrder(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> RandomOrder(int n, std::uint64_t seed) {
  std::vector<int> order = NaturalOrder(n);
  std::mt19937_64 rng = StreamRng(seed, 0x0bde);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(order[i], order[pick(rng)]);
  }
  return order;
}

DGResult DoubleGreedy(const Objective& f, const BoxDomain& box,
                      const DGConfig& config) {
  RequireSubmodularBox(f, box, "DoubleGreedy");
  if (!f.flags().submodular) {
    throw InvalidArgument("DoubleGreedy: objective is not declared submodular");
  }
  if (!(config.delta >= 0.0)) throw InvalidArgument("DoubleGreedy: delta < 0");
  const int n = f.dimension();
  std::vector<int> order =
      config.order.empty() ? RandomOrder(n, config.seed) : config.order;
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != NaturalOrder(n)) {
      throw InvalidArgument("DoubleGreedy: order is not a permutation");
    }
  }

  Point x = box.lower;
  Point y = box.upper;
  double fx = f.Value(x);
  double fy = f.Value(y);
  const double scale = std::max(1.0, std::abs(fx) + std::abs(fy));
  if (!(fx + fy >= -1e-9 * scale)) {
    std::ostringstream msg;
    msg << "DoubleGreedy: requires f(lower) + f(upper) >= 0, got " << fx + fy;
    throw InvalidArgument(msg.str());
  }

  DGResult result;
  result.trace_x.Append({0, 0.0, fx, 0.0});
  result.trace_y.Append({0, 0.0, fy, 0.0});
  for (int k = 0; k < n; ++k) {
    const int e = order[k];
    Maximize1dResult from_x, from_y;
    try {
      from_x = Maximize1d(f, x, e, box.lower[e], box.upper[e], config.mode,
                          config.tol);
      from_y = Maximize1d(f, y, e, box.lower[e], box.upper[e], config.mode,
                          config.tol);
    } catch (const NumericalError& err) {
      std::ostringstream msg;
      msg << "DoubleGreedy: 1-D maximization failed on coordinate " << e
          << ": " << err.what();
      throw SolverError(msg.str(), result.trace_x);
    }
    const double gain_x = from_x.value - fx;
    const double gain_y = from_y.value - fy;
    const double chosen = gain_x >= gain_y ? from_x.z_star : from_y.z_star;
    x[e] = chosen;
    y[e] = chosen;
    fx = f.Value(x);
    fy = f.Value(y);
    if (!std::isfinite(fx) || !std::isfinite(fy)) {
      std::ostringstream msg;
      msg << "DoubleGreedy: non-finite value after coordinate " << e;
      throw SolverError(msg.str(), result.trace_x);
    }
    if ((x.array() > y.array()).any()) result.sandwich_held = false;
    const double t = static_cast<double>(k + 1) / n;
    result.trace_x.Append({k + 1, k + 1 == n ? 1.0 : t, fx, 0.0});
    result.trace_y.Append({k + 1, k + 1 == n ? 1.0 : t, fy, 0.0});
  }
  result.converged = (x.array() == y.array()).all();
  result.x = std::move(x);
  result.order = std::move(order);
  return result;
}

// ---------------------------------------------------------------------------
// Curvature.

double LargestAbsEigenvalue(const Matrix& H, int max_iter, double tol) {
  if (H.rows() != H.cols() || H.rows() == 0) {
    throw InvalidArgument("LargestAbsEigenvalue: H must be square");
  }
  const Eigen::Index n = H.rows();
  Point v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = 1.0 + 0.01 * static_cast<double>(i % 7);
  v.normalize();
  double estimate = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    Point w = H * v;
    const double norm = w.norm();
    if (norm == 0.0) return 0.0;
    // Two steps of H keep the iteration stable when +lambda and -lambda share
    // the top magnitude.
    w /= norm;
    Point w2 = H * w;
    const double norm2 = w2.norm();
    const double next = std::sqrt(norm * norm2);
    v = w2 / norm2;
    if (std::abs(next - estimate) <= tol * std::max(1.0, next)) return next;
    estimate = next;
  }
  return estimate;
}

double EstimateCurvature(const Objective& f, const PolytopeDomain& P,
                         int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("EstimateCurvature: samples < 1");
  const std::vector<Point> points = HitAndRun(P, 2 * samples, seed);
  double worst = 0.0;
  const double h = 1e-3;
  for (int s = 0; s < samples; ++s) {
    const Point& x = points[2 * s];
    const Point& v = points[2 * s + 1];
    // Forward stencil: x - h v may leave the orthant.
    const double f0 = f.Value(x);
    const double f1 = f.Value(Point(x + h * v));
    const double f2 = f.Value(Point(x + 2.0 * h * v));
    worst = std::max(worst, std::abs(f2 - 2.0 * f1 + f0) / (h * h));
  }
  return worst;
}

}  // namespace subcont
