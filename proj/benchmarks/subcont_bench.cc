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

#include <benchmark/benchmark.h>

#include "subcont/baselines.h"
#include "subcont/constraint_geometry.h"
#include "subcont/function_zoo.h"
#include "subcont/solvers.h"

namespace subcont {
namespace {

void BM_LinearMaximize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonotoneNqp inst = GenMonotoneNqp(n, n / 2, 7);
  std::mt19937_64 rng = StreamRng(7, 9);
  const Point c = SampleUniform(BoxDomain::Unit(n), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(LinearMaximize(inst.polytope, c).objective);
  }
}
BENCHMARK(BM_LinearMaximize)->Arg(10)->Arg(50)->Arg(100);

void BM_FrankWolfe(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonotoneNqp inst = GenMonotoneNqp(n, n / 2, 11);
  const Objective f = MakeQuadraticObjective(inst.instance, true);
  FWConfig cfg;
  cfg.gamma = 1.0 / 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(FrankWolfeVariant(f, inst.polytope, cfg).x);
  }
}
BENCHMARK(BM_FrankWolfe)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_DoubleGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NonmonotoneNqp inst = GenNonmonotoneNqp(n, 13);
  const Objective f = MakeQuadraticObjective(inst.instance, false);
  DGConfig cfg;
  cfg.order = NaturalOrder(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(DoubleGreedy(f, inst.box, cfg).x);
  }
}
BENCHMARK(BM_DoubleGreedy)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_HitAndRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MonotoneNqp inst = GenMonotoneNqp(n, n / 2, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(HitAndRun(inst.polytope, 100, 17).size());
  }
}
BENCHMARK(BM_HitAndRun)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RevenueDoubleGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RevenueInstance inst = GenRevenue(n, 0.1, 10, 10, 10, 1.0, 19);
  const Objective f = MakeRevenueObjective(inst);
  DGConfig cfg;
  cfg.order = NaturalOrder(n);
  cfg.mode = OneDimMode::kRevenueDiscontinuous;
  for (auto _ : state) {
    benchmark::DoNotOptimize(DoubleGreedy(f, inst.box(), cfg).x);
  }
}
BENCHMARK(BM_RevenueDoubleGreedy)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace subcont

BENCHMARK_MAIN();
