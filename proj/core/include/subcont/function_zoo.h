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
// Objective families: quadratic programs, budget allocation, revenue,
// sensor energy, multi-resolution summarization and facility location,
// together with seeded random-instance generators.
//

#ifndef SUBCONT_FUNCTION_ZOO_H_
#define SUBCONT_FUNCTION_ZOO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcont/core_model.h"

namespace subcont {

struct ValueAndGradient {
  double value = 0.0;
  Point gradient;
};

// ---------------------------------------------------------------------------
// Quadratic programs f(x) = 1/2 x'Hx + h'x + c.

struct QuadraticInstance {
  Matrix H;
  Point h;
  double c = 0.0;

  // Validates shapes, finiteness and symmetry of H.
  static QuadraticInstance Make(Matrix H, Point h, double c);

  int dimension() const { return static_cast<int>(h.size()); }
  // Every off-diagonal entry of H is <= 0.
  bool IsSubmodular() const;
  // Every entry of H is <= 0.
  bool IsDrSubmodular() const;
};

double QuadValue(const QuadraticInstance& inst, const Point& x);
ValueAndGradient QuadEvalGrad(const QuadraticInstance& inst, const Point& x);

// Submodular and DR flags are derived from H; `monotone` is the caller's
// declaration for the domain the objective will be used on.
Objective MakeQuadraticObjective(const QuadraticInstance& inst, bool monotone,
                                 std::string name = "nqp");

struct MonotoneNqp {
  QuadraticInstance instance;
  PolytopeDomain polytope;
};

// H entries i.i.d. U[-100, 0] then symmetrized, A entries U[0, 1], b = 1,
// upper = 1, h = -H' upper, c = 0.
MonotoneNqp GenMonotoneNqp(int n, int m, std::uint64_t seed);

// Rebuilds h = -H' upper and the polytope for a new (b, upper) pair, keeping
// H and A. Used by sweeps over the right-hand side.
MonotoneNqp RescaleMonotoneNqp(const MonotoneNqp& base, double b_value,
                               double upper_value);

struct NonmonotoneNqpOptions {
  double density = 0.5;  // probability that an off-diagonal pair is nonzero
  double upper = 1.0;
  int max_attempts = 1000;
};

struct NonmonotoneNqp {
  QuadraticInstance instance;
  BoxDomain box;
  double positive_eigenvalue_fraction = 0.0;
  int attempts = 0;
};

// Off-diagonals i.i.d. U[-10, 0] (with the configured density), diagonal
// U[-10, 10] resampled until the eigenvalue signs are balanced,
// h = -0.2 H' upper and c the smallest non-negative offset with
// f(0) + f(upper) >= 0.
NonmonotoneNqp GenNonmonotoneNqp(int n, std::uint64_t seed,
                                 const NonmonotoneNqpOptions& options = {});

// Inclusive range of positive-eigenvalue counts accepted for dimension n:
// the integers in [0.4 n, 0.6 n], or {floor(n/2), ceil(n/2)} when that
// interval holds no integer.
std::pair<int, int> BalancedEigenCountRange(int n);

// ---------------------------------------------------------------------------
// Budget allocation: f(x) = sum_t [1 - prod_s (1 - p_st)^{x_s}].

struct InfluenceEdge {
  int channel = 0;
  int customer = 0;
  double probability = 0.0;
};

class BipartiteInfluenceInstance {
 public:
  // Rejects p outside (0, 1), out-of-range indices and duplicate edges.
  static BipartiteInfluenceInstance Make(int num_channels, int num_customers,
                                         std::vector<InfluenceEdge> edges);

  int num_channels() const { return num_channels_; }
  int num_customers() const { return num_customers_; }
  const std::vector<InfluenceEdge>& edges() const { return edges_; }

  ValueAndGradient EvalGrad(const Point& x) const;
  double Value(const Point& x) const;

 private:
  struct Incoming {
    int channel;
    double log_survival;  // ln(1 - p)
  };

  int num_channels_ = 0;
  int num_customers_ = 0;
  std::vector<InfluenceEdge> edges_;
  std::vector<std::vector<Incoming>> by_customer_;
};

ValueAndGradient InfluenceEvalGrad(const BipartiteInfluenceInstance& inst,
                                   const Point& x);
Objective MakeInfluenceObjective(const BipartiteInfluenceInstance& inst);

struct InfluenceGenOptions {
  int edges_per_customer = 3;
  double min_probability = 0.01;
  double max_probability = 0.3;
};

BipartiteInfluenceInstance GenBipartiteInfluence(
    int num_channels, int num_customers, std::uint64_t seed,
    const InfluenceGenOptions& options = {});

// ---------------------------------------------------------------------------
// Revenue maximization with continuous assignments:
//   f(x) = alpha * sum_{s: x_s = 0} sqrt(sum_{t: x_t != 0} x_t w_st)
//        + beta  * sum_{t: x_t != 0} w_tt x_t
//        - gamma * sum_{t: x_t != 0} x_t.
// Discontinuous wherever a coordinate leaves zero; no gradient.

struct RevenueEdge {
  int u = 0;
  int v = 0;
  double weight = 0.0;
};

class RevenueInstance {
 public:
  // `upper` is the box the instance is maximized over; construction asserts
  // f(0) + f(upper) >= 0.
  static RevenueInstance Make(int num_nodes, std::vector<RevenueEdge> edges,
                              Point self_activation, double alpha, double beta,
                              double gamma, Point upper);

  int num_nodes() const { return num_nodes_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  const Point& self_activation() const { return self_activation_; }
  const std::vector<RevenueEdge>& edges() const { return edges_; }
  const BoxDomain& box() const { return box_; }

  double Value(const Point& x) const;

  // Number of times gamma was halved by the generator to satisfy
  // f(0) + f(upper) >= 0.
  int gamma_halvings = 0;

 private:
  struct Neighbor {
    int node;
    double weight;
  };

  int num_nodes_ = 0;
  std::vector<RevenueEdge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  Point self_activation_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double gamma_ = 0.0;
  BoxDomain box_;
};

double RevenueEval(const RevenueInstance& inst, const Point& x);
Objective MakeRevenueObjective(const RevenueInstance& inst);

// Erdos-Renyi graph with w_st, w_tt ~ U(0, 1). Gamma is halved until
// f(0) + f(upper) >= 0 and the count is stored in `gamma_halvings`.
RevenueInstance GenRevenue(int num_nodes, double edge_probability,
                           double alpha, double beta, double gamma,
                           double upper, std::uint64_t seed);

// Same weight law on a caller-supplied edge list.
RevenueInstance GenRevenueOnGraph(int num_nodes,
                                  const std::vector<std::pair<int, int>>& graph,
                                  double alpha, double beta, double gamma,
                                  double upper, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Sensor energy management. Sensor e detects event v independently with
// probability q_e = 1 - (1 - p)^{x_e}; the earliest detector wins.

class SensorInstance {
 public:
  // times(e, v) >= 0 over locations x events. t_inf defaults to the largest
  // time and may be set to anything no smaller.
  static SensorInstance Make(Matrix times, double unit_probability,
                             std::optional<double> t_inf = std::nullopt);

  int num_locations() const { return static_cast<int>(times_.rows()); }
  int num_events() const { return static_cast<int>(times_.cols()); }
  double t_inf() const { return t_inf_; }
  double unit_probability() const { return p_; }

  ValueAndGradient EvalGrad(const Point& x) const;

 private:
  Matrix times_;
  double p_ = 0.5;
  double log_miss_ = 0.0;  // ln(1 - p)
  double t_inf_ = 0.0;
  // Per event, locations sorted by detection time (stable on ties).
  std::vector<std::vector<int>> order_;
};

ValueAndGradient SensorEvalGrad(const SensorInstance& inst, const Point& x);
Objective MakeSensorObjective(const SensorInstance& inst);
SensorInstance GenSensor(int num_locations, int num_events,
                         double unit_probability, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Multi-resolution summarization:
//   f(x) = sum_i sum_j sqrt(x_j) s_ij - sum_i sum_j x_i x_j s_ij.

struct SummarizationInstance {
  Matrix similarity;

  static SummarizationInstance Make(Matrix similarity);
  int dimension() const { return static_cast<int>(similarity.rows()); }
};

// Step of the one-sided difference quotient that stands in for the derivative
// of sqrt at zero.
inline constexpr double kSqrtSlopeStepAtZero = 1e-8;

ValueAndGradient SummarizationEvalGrad(const SummarizationInstance& inst,
                                       const Point& x);
Objective MakeSummarizationObjective(const SummarizationInstance& inst);
SummarizationInstance GenSummarization(int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Facility location: f(x) = sum_t max_s w_st (1 - exp(-x_s)).

struct FacilityInstance {
  Matrix weights;  // facilities x customers

  static FacilityInstance Make(Matrix weights);
  int num_facilities() const { return static_cast<int>(weights.rows()); }
};

double FacilityEval(const FacilityInstance& inst, const Point& x);
Objective MakeFacilityObjective(const FacilityInstance& inst);
FacilityInstance GenFacility(int num_facilities, int num_customers,
                             std::uint64_t seed);

}  // namespace subcont

#endif  // SUBCONT_FUNCTION_ZOO_H_
