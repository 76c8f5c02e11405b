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

//
// Maximizers for submodular continuous functions.
//
// FrankWolfeVariant: monotone DR-submodular f over a down-closed polytope.
// Starting from the origin it repeatedly moves along the LP vertex v^k that
// maximizes <v, grad f(x^k)>, x^{k+1} = x^k + gamma_k v^k, until the step
// sizes sum to one. With exact LP solves and constant gamma = 1/K the output
// satisfies f(x^K) >= (1 - 1/e) f(x*) - L / (2K) + f(0) / e.
//
// DoubleGreedy: non-monotone submodular f over a box with
// f(lower) + f(upper) >= 0. Two solutions start at the opposite corners and
// agree on one coordinate per round, taking the 1-D maximizer with the
// larger gain. The common output is a 1/3-approximation with exact 1-D
// solves, and both intermediate value sequences are non-decreasing.
//

#ifndef SUBCONT_SOLVERS_H_
#define SUBCONT_SOLVERS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "subcont/constraint_geometry.h"
#include "subcont/core_model.h"

namespace subcont {

// A solver aborted; the trace up to the failure is preserved.
class SolverError : public NumericalError {
 public:
  SolverError(const std::string& what, SolverTrace partial)
      : NumericalError(what), partial_(std::move(partial)) {}
  const SolverTrace& partial_trace() const { return partial_; }

 private:
  SolverTrace partial_;
};

// ---------------------------------------------------------------------------
// Frank-Wolfe variant.

using LinearOracle =
    std::function<LPSolution(const PolytopeDomain&, const Point&)>;

// Exact oracle (LinearMaximize) scaled by alpha: returns alpha v*, which is
// feasible by down-closedness and realizes multiplicative error alpha.
LinearOracle ScaledOracle(double alpha);

struct FWConfig {
  double gamma = 0.02;        // constant step in (0, 1]
  std::vector<double> schedule;  // optional explicit gamma_k, used when set
  double alpha = 1.0;         // multiplicative oracle error, (0, 1]
  double delta = 0.0;         // additive oracle error, >= 0
  double L = 1.0;             // Lipschitz estimate, > 0
  LinearOracle oracle;        // empty -> LinearMaximize

  // Number of constant-step iterations, ceil(1 / gamma).
  int iterations() const;
  void Validate() const;
};

struct FWResult {
  Point x;
  SolverTrace trace;           // row 0 is the starting point
  std::vector<double> steps;   // gamma_k actually taken
  double step_sum = 0.0;
  double max_feasibility_residual = 0.0;  // over every iterate
};

FWResult FrankWolfeVariant(const Objective& f, const PolytopeDomain& P,
                           const FWConfig& config);

// Right-hand side of the approximation guarantee,
// (1 - e^{-alpha}) f* - L/2 sum gamma_k^2 - L delta / 2 + e^{-alpha} f(0).
double FrankWolfeGuarantee(double f_star, double f_zero,
                           const std::vector<double>& steps, double alpha,
                           double delta, double L);

// ---------------------------------------------------------------------------
// One-dimensional maximization of z -> f(x with x_j = z) over [lo, hi].

enum class OneDimMode {
  // Fits a z^2 + b z through three evaluations and takes the closed-form
  // argmax. Exact for quadratic objectives.
  kQuadraticClosedForm,
  // Golden-section search for concave restrictions.
  kConcaveSearch,
  // Golden-section on (eps, hi] for the smooth concave extension, then
  // compared against the exact value at z = 0.
  kRevenueDiscontinuous,
};

const char* OneDimModeName(OneDimMode mode);
OneDimMode ParseOneDimMode(const std::string& name);

struct Maximize1dResult {
  double z_star = 0.0;
  double value = 0.0;
  // value >= (true maximum over [lo, hi]) - gap_bound for concave
  // restrictions (and exactly for quadratic ones).
  double gap_bound = 0.0;
};

inline constexpr double kRevenueProbeEpsilon = 1e-10;
inline constexpr double kDefaultOneDimTolerance = 1e-10;

Maximize1dResult Maximize1d(const Objective& f, const Point& x, int j,
                            double lo, double hi, OneDimMode mode,
                            double tol = kDefaultOneDimTolerance);

// argmax of a z^2 + b z on [lo, hi]: the stationary point -b / 2a when a < 0
// and it lies inside, else the better endpoint. Returns (z, value).
std::pair<double, double> QuadraticArgmax(double a, double b, double lo,
                                          double hi);

// ---------------------------------------------------------------------------
// DoubleGreedy.

struct DGConfig {
  std::vector<int> order;   // empty -> random permutation from `seed`
  std::uint64_t seed = 0;
  double delta = 0.0;       // declared 1-D additive error, reported only
  OneDimMode mode = OneDimMode::kQuadraticClosedForm;
  double tol = kDefaultOneDimTolerance;
};

std::vector<int> NaturalOrder(int n);
std::vector<int> RandomOrder(int n, std::uint64_t seed);

struct DGResult {
  Point x;
  SolverTrace trace_x;
  SolverTrace trace_y;
  std::vector<int> order;
  // x^k <= y^k held coordinate-wise after every round.
  bool sandwich_held = true;
  // x^n and y^n agree bitwise.
  bool converged = false;
};

DGResult DoubleGreedy(const Objective& f, const BoxDomain& box,
                      const DGConfig& config);

// ---------------------------------------------------------------------------
// Curvature estimates for guarantee checks.

// Largest |eigenvalue| of a symmetric matrix by power iteration.
double LargestAbsEigenvalue(const Matrix& H, int max_iter = 10000,
                            double tol = 1e-12);

// max over sampled x in P and directions v in P of |g''(0)| for
// g(s) = f(x + s v), from forward second differences.
double EstimateCurvature(const Objective& f, const PolytopeDomain& P,
                         int samples, std::uint64_t seed);

}  // namespace subcont

#endif  // SUBCONT_SOLVERS_H_
