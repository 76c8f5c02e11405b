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
// Sampled certificates for the lattice characterizations of continuous
// submodularity. A "pass" verdict means no violation larger than the
// tolerance was found in the sampled trials; it is not a proof.
//
// Samplers draw coordinates uniformly in the box. Ordered pairs a <= b come
// from the meet and join of two uniform draws. Each coordinate of the second
// draw is tied to the first with probability 1/2, so that violations carried
// by a single pair of coordinates are not swamped by the others.
//
// Each trial uses its own RNG stream derived from (seed, trial index), so a
// report is a deterministic function of (objective, domain, seed).
//

#ifndef SUBCONT_PROPERTY_SUITE_H_
#define SUBCONT_PROPERTY_SUITE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "subcont/core_model.h"

namespace subcont {

inline constexpr double kDefaultPropertyTolerance = 1e-9;
inline constexpr std::uint64_t kDefaultPropertySeed = 20170101;

enum class Verdict { kPass, kFail };

const char* VerdictName(Verdict v);

struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::kPass;
  int trials = 0;
  // Largest amount by which the tested inequality was violated; <= 0 when
  // every trial satisfied it with room to spare.
  double worst_violation = 0.0;
  // Points realizing the worst violation; present iff verdict == kFail.
  std::vector<Point> witness;
  std::string witness_description;
  // Offending coordinate for per-coordinate checks (gradient), else -1.
  int witness_coordinate = -1;

  bool passed() const { return verdict == Verdict::kPass; }
};

// f(x) + f(y) >= f(x v y) + f(x ^ y) - tol.
PropertyReport CheckSubmodular(const Objective& f, const BoxDomain& domain,
                               int pairs,
                               double tol = kDefaultPropertyTolerance,
                               std::uint64_t seed = kDefaultPropertySeed);

// Weak DR: for a <= b with a_i = b_i and k > 0,
// f(a + k e_i) - f(a) >= f(b + k e_i) - f(b) - tol.
PropertyReport CheckWeakDr(const Objective& f, const BoxDomain& domain,
                           int trials,
                           double tol = kDefaultPropertyTolerance,
                           std::uint64_t seed = kDefaultPropertySeed);

// DR: as CheckWeakDr without the a_i = b_i restriction.
PropertyReport CheckDr(const Objective& f, const BoxDomain& domain, int trials,
                       double tol = kDefaultPropertyTolerance,
                       std::uint64_t seed = kDefaultPropertySeed);

// f(x + k e_i) - f(x) >= f(x + (k + l) e_i) - f(x + l e_i) - tol.
PropertyReport CheckCoordinatewiseConcave(
    const Objective& f, const BoxDomain& domain, int trials,
    double tol = kDefaultPropertyTolerance,
    std::uint64_t seed = kDefaultPropertySeed);

// a <= b implies f(b) >= f(a) - tol.
PropertyReport CheckMonotone(const Objective& f, const BoxDomain& domain,
                             int trials,
                             double tol = kDefaultPropertyTolerance,
                             std::uint64_t seed = kDefaultPropertySeed);

// Midpoint concavity of g(s) = f(x + s v) over all pairs of a uniform grid
// on s in [0, 1]. Requires v >= 0 and gridpoints >= 2.
PropertyReport CheckDirectionalConcave(const Objective& f, const Point& x,
                                       const Point& v, int gridpoints,
                                       double tol = kDefaultPropertyTolerance);

// Finite-difference mixed partials
// (f(x+he_i+he_j) - f(x+he_i-he_j) - f(x-he_i+he_j) + f(x-he_i-he_j)) / 4h^2.
// Diagonal entries hold the second differences. Throws InvalidArgument when
// the stencil leaves `domain`.
Matrix MixedPartials(const Objective& f, const BoxDomain& domain,
                     const Point& x, double h);

// Every off-diagonal mixed partial is <= tol.
PropertyReport CheckHessianOffdiag(const Objective& f, const BoxDomain& domain,
                                   const Point& x, double h = 1e-4,
                                   double tol = 1e-6);

// Declared gradient vs. FiniteDiffGradient. The per-coordinate error is
// |g_i - d_i| / max(1, |g_i|, |d_i|). Throws InvalidArgument when f has no
// declared gradient.
PropertyReport CheckGradient(const Objective& f, const Point& x,
                             double h = kDefaultFiniteDiffStep,
                             double rel_tol = 1e-5);

}  // namespace subcont

#endif  // SUBCONT_PROPERTY_SUITE_H_
