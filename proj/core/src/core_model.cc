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

#include "subcont/core_model.h"

#include <cmath>
#include <sstream>

namespace subcont {

bool AllFinite(const Point& x) { return x.allFinite(); }

BoxDomain BoxDomain::Make(Point lower, Point upper) {
  if (lower.size() != upper.size()) {
    throw InvalidArgument("BoxDomain: lower and upper differ in length");
  }
  if (!AllFinite(lower) || !AllFinite(upper)) {
    throw InvalidArgument("BoxDomain: bounds must be finite");
  }
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (lower[i] > upper[i]) {
      std::ostringstream msg;
      msg << "BoxDomain: lower[" << i << "] = " << lower[i] << " > upper["
          << i << "] = " << upper[i];
      throw InvalidArgument(msg.str());
    }
  }
  return BoxDomain{std::move(lower), std::move(upper)};
}

BoxDomain BoxDomain::Unit(int n) {
  return Make(Point::Zero(n), Point::Ones(n));
}

bool BoxDomain::Contains(const Point& x, double tol) const {
  if (x.size() != lower.size()) return false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= lower[i] - tol && x[i] <= upper[i] + tol)) return false;
  }
  return true;
}

Point BoxDomain::Clamp(const Point& x) const {
  return x.cwiseMax(lower).cwiseMin(upper);
}

PolytopeDomain PolytopeDomain::Make(Matrix A, Point b, Point upper) {
  if (A.cols() != upper.size() && A.rows() > 0) {
    throw InvalidArgument("PolytopeDomain: A has wrong number of columns");
  }
  if (A.rows() != b.size()) {
    throw InvalidArgument("PolytopeDomain: A and b disagree on row count");
  }
  if (!A.allFinite() || !AllFinite(b) || !AllFinite(upper)) {
    throw InvalidArgument("PolytopeDomain: entries must be finite");
  }
  if ((A.array() < 0.0).any() || (b.array() < 0.0).any() ||
      (upper.array() < 0.0).any()) {
    throw InvalidArgument(
        "PolytopeDomain: A, b and upper must be non-negative (down-closed)");
  }
  if (A.rows() == 0) A.resize(0, upper.size());
  return PolytopeDomain{std::move(A), std::move(b), std::move(upper)};
}

PolytopeDomain PolytopeDomain::Box(Point upper) {
  const auto n = upper.size();
  return Make(Matrix(0, n), Point(0), std::move(upper));
}

BoxDomain PolytopeDomain::BoundingBox() const {
  return BoxDomain::Make(Point::Zero(dimension()), upper);
}

Objective::Objective(std::string name, int dimension, ValueFn value,
                     ObjectiveFlags flags)
    : name_(std::move(name)),
      dimension_(dimension),
      value_(std::move(value)),
      flags_(flags) {
  if (dimension_ <= 0) throw InvalidArgument("Objective: dimension must be >= 1");
  if (!value_) throw InvalidArgument("Objective: value function missing");
  if (flags_.differentiable) {
    throw InvalidArgument(
        "Objective: differentiable flag set without a gradient");
  }
}

Objective::Objective(std::string name, int dimension, ValueFn value,
                     GradientFn gradient, ObjectiveFlags flags)
    : name_(std::move(name)),
      dimension_(dimension),
      value_(std::move(value)),
      gradient_(std::move(gradient)),
      flags_(flags) {
  if (dimension_ <= 0) throw InvalidArgument("Objective: dimension must be >= 1");
  if (!value_) throw InvalidArgument("Objective: value function missing");
  if (!gradient_) throw InvalidArgument("Objective: gradient function missing");
  flags_.differentiable = true;
}

void Objective::CheckDimension(const Point& x) const {
  if (x.size() != dimension_) {
    std::ostringstream msg;
    msg << name_ << ": expected a point of dimension " << dimension_
        << ", got " << x.size();
    throw InvalidArgument(msg.str());
  }
}

double Objective::Value(const Point& x) const {
  CheckDimension(x);
  return value_(x);
}

Point Objective::Gradient(const Point& x) const {
  if (!gradient_) {
    throw InvalidArgument(name_ + ": objective has no declared gradient");
  }
  CheckDimension(x);
  return gradient_(x);
}

void SolverTrace::Append(const TraceRecord& record) {
  if (!records_.empty()) {
    const TraceRecord& last = records_.back();
    if (record.iteration <= last.iteration) {
      throw InvalidArgument("SolverTrace: iteration indices must increase");
    }
    if (record.t < last.t) {
      throw InvalidArgument("SolverTrace: cumulative step decreased");
    }
  }
  if (!(record.t >= 0.0 && record.t <= 1.0)) {
    throw InvalidArgument("SolverTrace: cumulative step outside [0, 1]");
  }
  if (!(record.feasibility_residual >= 0.0)) {
    throw InvalidArgument("SolverTrace: negative feasibility residual");
  }
  records_.push_back(record);
}

LatticePair LatticeOps(const Point& x, const Point& y) {
  if (x.size() != y.size()) {
    throw InvalidArgument("LatticeOps: dimension mismatch");
  }
  return LatticePair{x.cwiseMax(y), x.cwiseMin(y)};
}

Point FiniteDiffGradient(const Objective& f, const Point& x, double h) {
  if (!(h > 0.0)) throw InvalidArgument("FiniteDiffGradient: h must be > 0");
  Point grad(x.size());
  Point probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + h;
    const double plus = f.Value(probe);
    probe[i] = x[i] - h;
    const double minus = f.Value(probe);
    probe[i] = x[i];
    if (!std::isfinite(plus) || !std::isfinite(minus)) {
      std::ostringstream msg;
      msg << "FiniteDiffGradient: non-finite evaluation of " << f.name()
          << " along coordinate " << i;
      throw NumericalError(msg.str());
    }
    grad[i] = (plus - minus) / (2.0 * h);
  }
  return grad;
}

std::mt19937_64 StreamRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Point SampleUniform(const BoxDomain& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point x(box.dimension());
  for (int i = 0; i < box.dimension(); ++i) {
    x[i] = box.lower[i] + unit(rng) * (box.upper[i] - box.lower[i]);
  }
  return x;
}

}  // namespace subcont
