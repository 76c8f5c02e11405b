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
// Geometry of down-closed polytopes P = {x : 0 <= x <= u, A x <= b}:
// membership, linear maximization, Euclidean projection and samplers.
//
// Constraints are indexed as follows for an m x n matrix A:
//   [0, m)        rows of A x <= b
//   [m, m+n)      upper bounds x_j <= u_j
//   [m+n, m+2n)   lower bounds x_j >= 0
//

#ifndef SUBCONT_CONSTRAINT_GEOMETRY_H_
#define SUBCONT_CONSTRAINT_GEOMETRY_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subcont/core_model.h"

namespace subcont {

inline constexpr double kFeasibilityTolerance = 1e-9;

struct LPSolution {
  Point point;
  double objective = 0.0;
  // n linearly independent active constraints defining the vertex.
  std::vector<int> basis;
};

// Pivot limit exceeded; carries the basis at the time of failure.
class LPError : public NumericalError {
 public:
  LPError(const std::string& what, std::vector<int> basis)
      : NumericalError(what), basis_(std::move(basis)) {}
  const std::vector<int>& basis() const { return basis_; }

 private:
  std::vector<int> basis_;
};

// Dykstra's iteration stopped before reaching the tolerance.
class ProjectionError : public NumericalError {
 public:
  ProjectionError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

bool Contains(const PolytopeDomain& P, const Point& x, double tol);

// Largest violation over all constraints of P; zero for feasible points.
double FeasibilityResidual(const PolytopeDomain& P, const Point& x);

// Maximizes c'v over P with a dense tableau simplex. Box upper bounds are
// explicit rows; the all-slack basis is feasible because b, u >= 0, so no
// phase one is needed. Bland's rule makes the result deterministic.
LPSolution LinearMaximize(const PolytopeDomain& P, const Point& c);

// All vertices of P by brute force over n-subsets of constraints.
// Requires n <= 10 and m <= 10.
std::vector<Point> EnumerateVertices(const PolytopeDomain& P);

// Euclidean projection onto P by Dykstra's alternating projections over the
// box and each half-space. `max_iter` bounds the number of full sweeps.
Point ProjectPolytope(const PolytopeDomain& P, const Point& x,
                      double tol = 1e-9, int max_iter = 100000);

struct HitAndRunOptions {
  int burn_in = -1;   // default 50 n
  int thinning = -1;  // default n
  int max_direction_retries = 32;
};

// k samples of a hit-and-run chain started at the origin.
std::vector<Point> HitAndRun(const PolytopeDomain& P, int k, std::uint64_t seed,
                             const HitAndRunOptions& options = {});

// min(x, u) scaled by the largest t <= 1 that satisfies every row.
Point RatioShrink(const PolytopeDomain& P, const Point& x);

}  // namespace subcont

#endif  // SUBCONT_CONSTRAINT_GEOMETRY_H_
