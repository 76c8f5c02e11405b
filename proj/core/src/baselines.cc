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

#include "subcont/baselines.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace subcont {
namespace {

// Tracks the best candidate of a sampling baseline.
class BestSoFar {
 public:
  BestSoFar(const Objective& f, const PolytopeDomain& P, int total)
      : f_(f), P_(P), total_(total) {}

  void Offer(const Point& candidate) {
    const double value = f_.Value(candidate);
    ++count_;
    if (count_ == 1 || value > result_.value) {
      result_.value = value;
      result_.x = candidate;
      residual_ = FeasibilityResidual(P_, candidate);
    }
    const double t = count_ == total_ ? 1.0
                                      : static_cast<double>(count_) / total_;
    result_.trace.Append({count_, t, result_.value, residual_});
  }

  BaselineResult Take() { return std::move(result_); }

 private:
  const Objective& f_;
  const PolytopeDomain& P_;
  int total_;
  int count_ = 0;
  double residual_ = 0.0;
  BaselineResult result_;
};

void RequireSamples(int k_s, const char* who) {
  if (k_s < 1) throw InvalidArgument(std::string(who) + ": k_s must be >= 1");
}

}  // namespace

BaselineResult RandomBestOf(const Objective& f, const PolytopeDomain& P,
                            int k_s, std::uint64_t seed,
                            const HitAndRunOptions& options) {
  RequireSamples(k_s, "RandomBestOf");
  const std::vector<Point> samples = HitAndRun(P, k_s, seed, options);
  BestSoFar best(f, P, k_s);
  for (const Point& s : samples) best.Offer(s);
  return best.Take();
}

BaselineResult RandomCubeBaseline(const Objective& f, const PolytopeDomain& P,
                                  int k_s, std::uint64_t seed) {
  RequireSamples(k_s, "RandomCubeBaseline");
  const BoxDomain cube = P.BoundingBox();
  std::mt19937_64 rng = StreamRng(seed, 0);
  BestSoFar best(f, P, k_s);
  for (int i = 0; i < k_s; ++i) best.Offer(RatioShrink(P, SampleUniform(cube, rng)));
  return best.Take();
}

BaselineResult ProjGradAscent(const Objective& f, const Domain& domain,
                              double step, int iters, double projection_tol) {
  if (!f.has_gradient()) {
    throw InvalidArgument("ProjGradAscent: objective is not differentiable");
  }
  if (!(step >= 0.0) || iters < 0) {
    throw InvalidArgument("ProjGradAscent: step and iters must be >= 0");
  }
  const BoxDomain* box = std::get_if<BoxDomain>(&domain);
  const PolytopeDomain* polytope = std::get_if<PolytopeDomain>(&domain);
  const int n = box ? box->dimension() : polytope->dimension();
  if (n != f.dimension()) {
    throw InvalidArgument("ProjGradAscent: domain dimension mismatch");
  }
  const auto project = [&](const Point& x) -> Point {
    if (box) return box->Clamp(x);
    return ProjectPolytope(*polytope, x, projection_tol);
  };
  const auto residual = [&](const Point& x) {
    if (polytope) return FeasibilityResidual(*polytope, x);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      worst = std::max({worst, box->lower[i] - x[i], x[i] - box->upper[i]});
    }
    return worst;
  };

  BaselineResult result;
  result.x = box ? box->lower : Point::Zero(n);
  result.value = f.Value(result.x);
  result.trace.Append({0, 0.0, result.value, residual(result.x)});
  for (int k = 1; k <= iters; ++k) {
    const Point grad = f.Gradient(result.x);
    if (!AllFinite(grad)) {
      std::ostringstream msg;
      msg << "ProjGradAscent: non-finite gradient at iteration " << k;
      throw SolverError(msg.str(), result.trace);
    }
    result.x = project(result.x + step * grad);
    result.value = f.Value(result.x);
    const double t = k == iters ? 1.0 : static_cast<double>(k) / iters;
    result.trace.Append({k, t, result.value, residual(result.x)});
  }
  return result;
}

BaselineResult SingleGreedy(const Objective& f, const BoxDomain& box,
                            const std::vector<int>& order, OneDimMode mode,
                            double tol) {
  const int n = f.dimension();
  if (box.dimension() != n) {
    throw InvalidArgument("SingleGreedy: box dimension mismatch");
  }
  {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != NaturalOrder(n)) {
      throw InvalidArgument("SingleGreedy: order is not a permutation");
    }
  }
  BaselineResult result;
  result.x = box.lower;
  result.value = f.Value(result.x);
  result.trace.Append({0, 0.0, result.value, 0.0});
  for (int k = 0; k < n; ++k) {
    const int e = order[k];
    const Maximize1dResult best =
        Maximize1d(f, result.x, e, box.lower[e], box.upper[e], mode, tol);
    if (best.value > result.value) {
      result.x[e] = best.z_star;
      result.value = f.Value(result.x);
    }
    const double t = k + 1 == n ? 1.0 : static_cast<double>(k + 1) / n;
    result.trace.Append({k + 1, t, result.value, 0.0});
  }
  return result;
}

}  // namespace subcont
