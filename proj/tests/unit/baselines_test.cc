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

#include <gtest/gtest.h>

#include "subcont/function_zoo.h"

namespace subcont {
namespace {

Point P(std::initializer_list<double> v) {
  Point p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

PolytopeDomain Simplex(int n) {
  return PolytopeDomain::Make(Matrix::Ones(1, n), P({1.0}),
                              Point::Ones(n));
}

Objective SumObjective(int n) {
  ObjectiveFlags flags;
  flags.monotone = flags.submodular = flags.dr_submodular = true;
  return Objective(
      "sum", n, [](const Point& x) { return x.sum(); },
      [n](const Point&) { return Point(Point::Ones(n)); }, flags);
}

TEST(RandomBestOfTest, SingleSampleIsOneHitAndRunPoint) {
  const PolytopeDomain simplex = Simplex(3);
  const Objective f = SumObjective(3);
  const BaselineResult r = RandomBestOf(f, simplex, 1, 9);
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.value, f.Value(r.x));
  EXPECT_TRUE(Contains(simplex, r.x, 1e-9));
  EXPECT_EQ(r.trace.back().t, 1.0);
}

TEST(RandomBestOfTest, TraceIsPrefixMaximumAndFeasible) {
  const MonotoneNqp inst = GenMonotoneNqp(8, 4, 3);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  const BaselineResult r = RandomBestOf(f, inst.polytope, 200, 3);
  ASSERT_EQ(r.trace.size(), 200u);
  double prev = -1e300;
  for (const TraceRecord& rec : r.trace.records()) {
    EXPECT_GE(rec.objective, prev);
    EXPECT_LE(rec.feasibility_residual, 1e-9);
    prev = rec.objective;
  }
  EXPECT_EQ(r.trace.back().objective, r.value);
  EXPECT_TRUE(Contains(inst.polytope, r.x, 1e-9));
}

TEST(RandomBestOfTest, SimplexValueAtMostOne) {
  const BaselineResult r = RandomBestOf(SumObjective(4), Simplex(4), 300, 1);
  EXPECT_LE(r.value, 1.0 + 1e-9);
  EXPECT_GT(r.value, 0.5);
}

TEST(RandomBestOfTest, Deterministic) {
  const MonotoneNqp inst = GenMonotoneNqp(6, 3, 2);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  const BaselineResult a = RandomBestOf(f, inst.polytope, 50, 17);
  const BaselineResult b = RandomBestOf(f, inst.polytope, 50, 17);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.value, b.value);
  EXPECT_THROW(RandomBestOf(f, inst.polytope, 0, 17), InvalidArgument);
}

TEST(RandomCubeTest, FeasibleAndDeterministic) {
  const MonotoneNqp inst = GenMonotoneNqp(10, 5, 6);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  const BaselineResult a = RandomCubeBaseline(f, inst.polytope, 100, 6);
  const BaselineResult b = RandomCubeBaseline(f, inst.polytope, 100, 6);
  EXPECT_EQ(a.x, b.x);
  EXPECT_TRUE(Contains(inst.polytope, a.x, 1e-9));
  EXPECT_EQ(a.value, f.Value(a.x));
}

TEST(RandomCubeTest, ShrinkNeverHelpsMonotoneObjective) {
  // Replaying the box samples: every shrunk point is dominated by its
  // unshrunk box sample, so the best shrunk value is below the best box
  // value.
  const MonotoneNqp inst = GenMonotoneNqp(6, 3, 8);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  const int k_s = 64;
  const BaselineResult r = RandomCubeBaseline(f, inst.polytope, k_s, 8);
  std::mt19937_64 rng = StreamRng(8, 0);
  const BoxDomain box = inst.polytope.BoundingBox();
  double best_unshrunk = -1e300;
  for (int k = 0; k < k_s; ++k) {
    best_unshrunk = std::max(best_unshrunk, f.Value(SampleUniform(box, rng)));
  }
  EXPECT_LE(r.value, best_unshrunk + 1e-12);
}

TEST(ProjGradTest, ZeroStepStaysAtStart) {
  const MonotoneNqp inst = GenMonotoneNqp(5, 2, 1);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  const BaselineResult r = ProjGradAscent(f, inst.polytope, 0.0, 10);
  EXPECT_EQ(r.x, Point::Zero(5));
  EXPECT_EQ(r.value, 0.0);
}

TEST(ProjGradTest, ConvergesToInteriorMaximizer) {
  ObjectiveFlags flags;
  const Objective f(
      "bowl", 2,
      [](const Point& x) { return -(x.array() - 0.5).square().sum(); },
      [](const Point& x) { return Point(-2.0 * (x.array() - 0.5)); }, flags);
  const BaselineResult r =
      ProjGradAscent(f, BoxDomain::Unit(2), 0.1, 200);
  EXPECT_NEAR(r.x[0], 0.5, 1e-3);
  EXPECT_NEAR(r.x[1], 0.5, 1e-3);
  EXPECT_EQ(r.trace.size(), 201u);
}

TEST(ProjGradTest, PolytopeIteratesFeasible) {
  const PolytopeDomain simplex = Simplex(3);
  const BaselineResult r = ProjGradAscent(SumObjective(3), simplex, 0.2, 30);
  for (const TraceRecord& rec : r.trace.records()) {
    EXPECT_LE(rec.feasibility_residual, 1e-9);
  }
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_TRUE(Contains(simplex, r.x, 1e-9));
}

TEST(SingleGreedyTest, ModularExample) {
  ObjectiveFlags flags;
  const Objective f(
      "modular", 2, [](const Point& x) { return 2 * x[0] - x[1]; }, flags);
  const BaselineResult r = SingleGreedy(f, BoxDomain::Unit(2), NaturalOrder(2),
                                        OneDimMode::kConcaveSearch);
  EXPECT_EQ(r.x, P({1, 0}));
  EXPECT_EQ(r.value, 2.0);
}

TEST(SingleGreedyTest, MonotoneReachesUpperCorner) {
  const BoxDomain box = BoxDomain::Make(Point::Zero(3), P({1, 2, 3}));
  const BaselineResult r = SingleGreedy(SumObjective(3), box, NaturalOrder(3),
                                        OneDimMode::kQuadraticClosedForm);
  EXPECT_EQ(r.x, box.upper);
}

TEST(SingleGreedyTest, ConstantStaysAtLowerCorner) {
  const Objective f("constant", 3, [](const Point&) { return 4.0; },
                    ObjectiveFlags{});
  const BoxDomain box = BoxDomain::Make(P({0.1, 0.2, 0.3}), Point::Ones(3));
  const BaselineResult r = SingleGreedy(f, box, NaturalOrder(3),
                                        OneDimMode::kConcaveSearch);
  EXPECT_EQ(r.x, box.lower);
  EXPECT_EQ(r.trace.size(), 4u);
}

}  // namespace
}  // namespace subcont
