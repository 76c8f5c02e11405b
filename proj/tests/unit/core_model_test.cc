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
#include <limits>

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

Objective Plain(int n, Objective::ValueFn fn) {
  return Objective("plain", n, std::move(fn), ObjectiveFlags{});
}

TEST(BoxDomainTest, RejectsInvertedBounds) {
  EXPECT_THROW(BoxDomain::Make(P({1.0}), P({0.0})), InvalidArgument);
  EXPECT_THROW(BoxDomain::Make(P({0.0}),
                               P({std::numeric_limits<double>::infinity()})),
               InvalidArgument);
}

TEST(BoxDomainTest, ContainsAndClamp) {
  const BoxDomain box = BoxDomain::Unit(2);
  EXPECT_TRUE(box.Contains(P({0.0, 1.0}), 0.0));
  EXPECT_FALSE(box.Contains(P({1.1, 0.5}), 1e-9));
  EXPECT_EQ(box.Clamp(P({-1.0, 2.0})), P({0.0, 1.0}));
}

TEST(PolytopeDomainTest, RejectsNegativeData) {
  Matrix A(1, 2);
  A << 1.0, -1.0;
  EXPECT_THROW(PolytopeDomain::Make(A, P({1.0}), P({1.0, 1.0})),
               InvalidArgument);
  A << 1.0, 1.0;
  EXPECT_THROW(PolytopeDomain::Make(A, P({-1.0}), P({1.0, 1.0})),
               InvalidArgument);
  EXPECT_THROW(PolytopeDomain::Make(A, P({1.0}), P({1.0, -1.0})),
               InvalidArgument);
  EXPECT_NO_THROW(PolytopeDomain::Make(A, P({1.0}), P({1.0, 1.0})));
}

TEST(PolytopeDomainTest, BoxHasNoRows) {
  const PolytopeDomain P2 = PolytopeDomain::Box(P({1.0, 2.0}));
  EXPECT_EQ(P2.rows(), 0);
  EXPECT_EQ(P2.dimension(), 2);
  EXPECT_EQ(P2.BoundingBox().upper, P({1.0, 2.0}));
  EXPECT_EQ(P2.BoundingBox().lower, P({0.0, 0.0}));
}

TEST(ObjectiveTest, GradientPresenceFollowsConstructor) {
  ObjectiveFlags flags;
  flags.differentiable = true;
  EXPECT_THROW(Objective("bad", 1, [](const Point&) { return 0.0; }, flags),
               InvalidArgument);

  const Objective plain = Plain(1, [](const Point& x) { return x[0]; });
  EXPECT_FALSE(plain.has_gradient());
  EXPECT_FALSE(plain.flags().differentiable);
  EXPECT_THROW(plain.Gradient(P({0.0})), InvalidArgument);

  const Objective smooth(
      "smooth", 1, [](const Point& x) { return x[0]; },
      [](const Point&) { return P({1.0}); }, ObjectiveFlags{});
  EXPECT_TRUE(smooth.has_gradient());
  EXPECT_TRUE(smooth.flags().differentiable);
}

TEST(ObjectiveTest, DimensionChecked) {
  const Objective f = Plain(2, [](const Point& x) { return x.sum(); });
  EXPECT_THROW(f.Value(P({1.0})), InvalidArgument);
  EXPECT_DOUBLE_EQ(f.Value(P({1.0, 2.0})), 3.0);
}

TEST(SolverTraceTest, EnforcesOrdering) {
  SolverTrace trace;
  trace.Append({0, 0.0, 1.0, 0.0});
  trace.Append({1, 0.5, 2.0, 0.0});
  EXPECT_THROW(trace.Append({1, 0.6, 2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(trace.Append({2, 0.4, 2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(trace.Append({2, 1.5, 2.0, 0.0}), InvalidArgument);
  EXPECT_THROW(trace.Append({2, 0.7, 2.0, -1.0}), InvalidArgument);
  trace.Append({2, 1.0, 3.0, 0.0});
  EXPECT_EQ(trace.size(), 3u);
  EXPECT_EQ(trace.back().objective, 3.0);
}

TEST(LatticeOpsTest, Examples) {
  LatticePair a = LatticeOps(P({1, 0}), P({0, 1}));
  EXPECT_EQ(a.join, P({1, 1}));
  EXPECT_EQ(a.meet, P({0, 0}));

  LatticePair b = LatticeOps(P({0.3, 0.7}), P({0.3, 0.7}));
  EXPECT_EQ(b.join, P({0.3, 0.7}));
  EXPECT_EQ(b.meet, P({0.3, 0.7}));

  LatticePair c = LatticeOps(P({2, -1, 0}), P({1, 0, 0}));
  EXPECT_EQ(c.join, P({2, 0, 0}));
  EXPECT_EQ(c.meet, P({1, -1, 0}));

  EXPECT_THROW(LatticeOps(P({1}), P({1, 2})), InvalidArgument);
}

TEST(LatticeOpsTest, JoinPlusMeetIsExactSum) {
  std::mt19937_64 rng = StreamRng(5, 0);
  const BoxDomain box = BoxDomain::Make(Point::Constant(6, -3.0),
                                        Point::Constant(6, 3.0));
  for (int trial = 0; trial < 200; ++trial) {
    const Point x = SampleUniform(box, rng);
    const Point y = SampleUniform(box, rng);
    const LatticePair lp = LatticeOps(x, y);
    EXPECT_EQ(lp.join + lp.meet, x + y);
  }
}

TEST(FiniteDiffGradientTest, Examples) {
  const Objective sum = Plain(2, [](const Point& x) { return x[0] + x[1]; });
  const Point g1 = FiniteDiffGradient(sum, P({0.3, -4.0}));
  EXPECT_NEAR(g1[0], 1.0, 1e-8);
  EXPECT_NEAR(g1[1], 1.0, 1e-8);

  const Objective prod = Plain(2, [](const Point& x) { return x[0] * x[1]; });
  const Point g2 = FiniteDiffGradient(prod, P({2.0, 3.0}), 1e-5);
  EXPECT_NEAR(g2[0], 3.0, 1e-6);
  EXPECT_NEAR(g2[1], 2.0, 1e-6);

  const Objective constant = Plain(3, [](const Point&) { return 7.0; });
  EXPECT_EQ(FiniteDiffGradient(constant, P({1, 2, 3})), Point::Zero(3));
}

TEST(FiniteDiffGradientTest, NamesNonFiniteCoordinate) {
  const Objective f = Plain(2, [](const Point& x) {
    return x[1] > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x[0];
  });
  try {
    FiniteDiffGradient(f, P({0.0, 0.5}));
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("coordinate 1"), std::string::npos)
        << e.what();
  }
}

TEST(FiniteDiffGradientTest, MatchesQuadraticGradient) {
  const NonmonotoneNqp inst = GenNonmonotoneNqp(5, 21);
  const Objective f = MakeQuadraticObjective(inst.instance, false);
  std::mt19937_64 rng = StreamRng(21, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Point x = SampleUniform(inst.box, rng);
    const Point exact = f.Gradient(x);
    const Point approx = FiniteDiffGradient(f, x, 1e-5);
    for (int i = 0; i < x.size(); ++i) {
      const double scale = std::max({1.0, std::abs(exact[i])});
      EXPECT_LE(std::abs(exact[i] - approx[i]) / scale, 1e-5);
    }
  }
}

TEST(StreamRngTest, StreamsAreDistinctAndReproducible) {
  std::mt19937_64 a = StreamRng(1, 0);
  std::mt19937_64 b = StreamRng(1, 0);
  std::mt19937_64 c = StreamRng(1, 1);
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
}

}  // namespace
}  // namespace subcont
