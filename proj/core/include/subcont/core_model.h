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
// Shared domain types: points, feasible regions, objectives, traces.
//

#ifndef SUBCONT_CORE_MODEL_H_
#define SUBCONT_CORE_MODEL_H_

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace subcont {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a computation produces a non-finite value or fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool AllFinite(const Point& x);

// Axis-aligned box [lower, upper].
struct BoxDomain {
  Point lower;
  Point upper;

  // Validates lower <= upper and finiteness.
  static BoxDomain Make(Point lower, Point upper);
  static BoxDomain Unit(int n);

  int dimension() const { return static_cast<int>(lower.size()); }
  bool Contains(const Point& x, double tol) const;
  Point Clamp(const Point& x) const;
};

// Down-closed polytope {x : 0 <= x <= upper, A x <= b} with A, b, upper >= 0.
struct PolytopeDomain {
  Matrix A;
  Point b;
  Point upper;

  static PolytopeDomain Make(Matrix A, Point b, Point upper);
  static PolytopeDomain Box(Point upper);

  int dimension() const { return static_cast<int>(upper.size()); }
  int rows() const { return static_cast<int>(A.rows()); }
  BoxDomain BoundingBox() const;
};

struct ObjectiveFlags {
  bool monotone = false;
  bool dr_submodular = false;
  bool submodular = false;
  bool differentiable = false;
};

// Uniform handle for value (and optionally gradient) evaluation. Flags are
// declarations made by the constructing code; the property suite certifies
// them by sampling.
class Objective {
 public:
  using ValueFn = std::function<double(const Point&)>;
  using GradientFn = std::function<Point(const Point&)>;

  // Non-differentiable objective; `flags.differentiable` must be false.
  Objective(std::string name, int dimension, ValueFn value,
            ObjectiveFlags flags);
  // Differentiable objective; `flags.differentiable` is forced to true.
  Objective(std::string name, int dimension, ValueFn value,
            GradientFn gradient, ObjectiveFlags flags);

  double Value(const Point& x) const;
  Point Gradient(const Point& x) const;

  bool has_gradient() const { return static_cast<bool>(gradient_); }
  int dimension() const { return dimension_; }
  const ObjectiveFlags& flags() const { return flags_; }
  const std::string& name() const { return name_; }

 private:
  void CheckDimension(const Point& x) const;

  std::string name_;
  int dimension_;
  ValueFn value_;
  GradientFn gradient_;
  ObjectiveFlags flags_;
};

struct TraceRecord {
  int iteration = 0;
  double t = 0.0;  // cumulative step in [0, 1]
  double objective = 0.0;
  double feasibility_residual = 0.0;
};

// Per-iteration log. Append() enforces strictly increasing iterations and a
// non-decreasing cumulative step no larger than one.
class SolverTrace {
 public:
  void Append(const TraceRecord& record);

  const std::vector<TraceRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  const TraceRecord& back() const { return records_.back(); }

 private:
  std::vector<TraceRecord> records_;
};

struct LatticePair {
  Point join;  // coordinate-wise max
  Point meet;  // coordinate-wise min
};

LatticePair LatticeOps(const Point& x, const Point& y);

inline constexpr double kDefaultFiniteDiffStep = 1e-5;

// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h. The caller keeps x
// at least h away from the boundary of f's domain.
Point FiniteDiffGradient(const Objective& f, const Point& x,
                         double h = kDefaultFiniteDiffStep);

// Independent RNG stream for (seed, stream index).
std::mt19937_64 StreamRng(std::uint64_t seed, std::uint64_t stream);

// Uniform point in the box.
Point SampleUniform(const BoxDomain& box, std::mt19937_64& rng);

}  // namespace subcont

#endif  // SUBCONT_CORE_MODEL_H_
