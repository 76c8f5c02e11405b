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
// Comparison methods: Random, RandomCube, ProjGrad and SingleGreedy.
//

#ifndef SUBCONT_BASELINES_H_
#define SUBCONT_BASELINES_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "subcont/constraint_geometry.h"
#include "subcont/core_model.h"
#include "subcont/solvers.h"

namespace subcont {

struct BaselineResult {
  Point x;
  double value = 0.0;
  // Random methods log the best value after each sample; ProjGrad logs every
  // iterate; SingleGreedy logs every coordinate.
  SolverTrace trace;
};

// Best of k_s hit-and-run samples.
BaselineResult RandomBestOf(const Objective& f, const PolytopeDomain& P,
                            int k_s, std::uint64_t seed,
                            const HitAndRunOptions& options = {});

// Best of k_s uniform samples of the bounding box pulled into P by
// RatioShrink.
BaselineResult RandomCubeBaseline(const Objective& f, const PolytopeDomain& P,
                                  int k_s, std::uint64_t seed);

using Domain = std::variant<BoxDomain, PolytopeDomain>;

// Default step grid for ProjGrad sweeps.
inline const std::vector<double> kDefaultProjGradSteps = {1e-4, 1e-3, 1e-2};

// x <- Proj(x + step grad f(x)) from the lower corner (the origin for
// polytopes).
BaselineResult ProjGradAscent(const Objective& f, const Domain& domain,
                              double step, int iters,
                              double projection_tol = 1e-9);

// One pass over the coordinates from the lower corner; each coordinate moves
// to its 1-D maximizer when that strictly improves f.
BaselineResult SingleGreedy(const Objective& f, const BoxDomain& box,
                            const std::vector<int>& order, OneDimMode mode,
                            double tol = kDefaultOneDimTolerance);

}  // namespace subcont

#endif  // SUBCONT_BASELINES_H_
