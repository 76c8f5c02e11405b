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

#include "subcont/function_zoo.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

namespace subcont {
namespace {

void RequireNonNegative(const Point& x, const char* who) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0)) {
      std::ostringstream msg;
      msg << who << ": coordinate " << i << " is negative (" << x[i] << ")";
      throw InvalidArgument(msg.str());
    }
  }
}

void RequireSize(const Point& x, Eigen::Index n, const char* who) {
  if (x.size() != n) {
    std::ostringstream msg;
    msg << who << ": expected dimension " << n << ", got " << x.size();
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Quadratic.

QuadraticInstance QuadraticInstance::Make(Matrix H, Point h, double c) {
  if (H.rows() != H.cols() || H.rows() != h.size() || h.size() == 0) {
    throw InvalidArgument("QuadraticInstance: H must be n x n with h of size n");
  }
  if (!H.allFinite() || !AllFinite(h) || !std::isfinite(c)) {
    throw InvalidArgument("QuadraticInstance: entries must be finite");
  }
  const double scale = std::max(1.0, H.cwiseAbs().maxCoeff());
  if ((H - H.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("QuadraticInstance: H must be symmetric");
  }
  return QuadraticInstance{std::move(H), std::move(h), c};
}

bool QuadraticInstance::IsSubmodular() const {
  for (Eigen::Index j = 0; j < H.cols(); ++j) {
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      if (i != j && H(i, j) > 0.0) return false;
    }
  }
  return true;
}

bool QuadraticInstance::IsDrSubmodular() const {
  return (H.array() <= 0.0).all();
}

double QuadValue(const QuadraticInstance& inst, const Point& x) {
  RequireSize(x, inst.h.size(), "QuadValue");
  double quad = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    quad += x[j] * inst.H.col(j).dot(x);
  }
  return 0.5 * quad + inst.h.dot(x) + inst.c;
}

ValueAndGradient QuadEvalGrad(const QuadraticInstance& inst, const Point& x) {
  RequireSize(x, inst.h.size(), "QuadEvalGrad");
  Point grad = inst.H * x + inst.h;
  // 1/2 x'Hx + h'x = 1/2 x'(Hx + h) + 1/2 h'x
  const double value = 0.5 * x.dot(grad) + 0.5 * inst.h.dot(x) + inst.c;
  return ValueAndGradient{value, std::move(grad)};
}

Objective MakeQuadraticObjective(const QuadraticInstance& inst, bool monotone,
                                 std::string name) {
  auto shared = std::make_shared<const QuadraticInstance>(inst);
  ObjectiveFlags flags;
  flags.monotone = monotone;
  flags.submodular = inst.IsSubmodular();
  flags.dr_submodular = inst.IsDrSubmodular();
  return Objective(
      std::move(name), inst.dimension(),
      [shared](const Point& x) { return QuadValue(*shared, x); },
      [shared](const Point& x) -> Point {
        return shared->H * x + shared->h;
      },
      flags);
}

MonotoneNqp GenMonotoneNqp(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw InvalidArgument("GenMonotoneNqp: n, m must be >= 1");
  std::mt19937_64 h_rng = StreamRng(seed, 0);
  std::mt19937_64 a_rng = StreamRng(seed, 1);
  std::uniform_real_distribution<double> h_dist(-100.0, 0.0);
  std::uniform_real_distribution<double> a_dist(0.0, 1.0);

  Matrix raw(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) raw(i, j) = h_dist(h_rng);
  }
  Matrix H = 0.5 * (raw + raw.transpose());
  Matrix A(m, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) A(i, j) = a_dist(a_rng);
  }
  const Point upper = Point::Ones(n);
  Point h = -H.transpose() * upper;
  MonotoneNqp out{QuadraticInstance::Make(std::move(H), std::move(h), 0.0),
                  PolytopeDomain::Make(std::move(A), Point::Ones(m), upper)};
  return out;
}

MonotoneNqp RescaleMonotoneNqp(const MonotoneNqp& base, double b_value,
                               double upper_value) {
  if (!(b_value >= 0.0) || !(upper_value >= 0.0)) {
    throw InvalidArgument("RescaleMonotoneNqp: b and upper must be >= 0");
  }
  const int n = base.instance.dimension();
  const Point upper = Point::Constant(n, upper_value);
  Point h = -base.instance.H.transpose() * upper;
  return MonotoneNqp{
      QuadraticInstance::Make(base.instance.H, std::move(h), 0.0),
      PolytopeDomain::Make(base.polytope.A,
                           Point::Constant(base.polytope.rows(), b_value),
                           upper)};
}

std::pair<int, int> BalancedEigenCountRange(int n) {
  const int lo = static_cast<int>(std::ceil(0.4 * n - 1e-12));
  const int hi = static_cast<int>(std::floor(0.6 * n + 1e-12));
  if (lo <= hi) return {lo, hi};
  return {n / 2, (n + 1) / 2};
}

NonmonotoneNqp GenNonmonotoneNqp(int n, std::uint64_t seed,
                                 const NonmonotoneNqpOptions& options) {
  if (n < 1) throw InvalidArgument("GenNonmonotoneNqp: n must be >= 1");
  if (!(options.density >= 0.0 && options.density <= 1.0)) {
    throw InvalidArgument("GenNonmonotoneNqp: density must lie in [0, 1]");
  }
  if (!(options.upper > 0.0)) {
    throw InvalidArgument("GenNonmonotoneNqp: upper must be > 0");
  }

  std::mt19937_64 off_rng = StreamRng(seed, 0);
  std::uniform_real_distribution<double> off_dist(-10.0, 0.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix H = Matrix::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const bool keep = unit(off_rng) < options.density;
      const double value = off_dist(off_rng);
      if (keep) {
        H(i, j) = value;
        H(j, i) = value;
      }
    }
  }

  const auto [min_positive, max_positive] = BalancedEigenCountRange(n);
  std::uniform_real_distribution<double> diag_dist(-10.0, 10.0);
  int attempt = 0;
  int positive = -1;
  for (; attempt < options.max_attempts; ++attempt) {
    std::mt19937_64 diag_rng = StreamRng(seed, 1 + attempt);
    for (int i = 0; i < n; ++i) H(i, i) = diag_dist(diag_rng);
    Eigen::SelfAdjointEigenSolver<Matrix> eig(H, Eigen::EigenvaluesOnly);
    positive = static_cast<int>((eig.eigenvalues().array() > 0.0).count());
    if (positive >= min_positive && positive <= max_positive) break;
  }
  if (attempt == options.max_attempts) {
    throw NumericalError(
        "GenNonmonotoneNqp: could not balance eigenvalue signs");
  }

  const Point upper = Point::Constant(n, options.upper);
  Point h = -0.2 * (H.transpose() * upper);
  const double f_upper_no_c = 0.5 * upper.dot(H * upper) + h.dot(upper);
  const double c = std::max(0.0, -0.5 * f_upper_no_c);

  NonmonotoneNqp out{
      QuadraticInstance::Make(std::move(H), std::move(h), c),
      BoxDomain::Make(Point::Zero(n), upper),
      static_cast<double>(positive) / n, attempt + 1};
  return out;
}

// ---------------------------------------------------------------------------
// Budget allocation.

BipartiteInfluenceInstance BipartiteInfluenceInstance::Make(
    int num_channels, int num_customers, std::vector<InfluenceEdge> edges) {
  if (num_channels < 1 || num_customers < 1) {
    throw InvalidArgument("BipartiteInfluenceInstance: empty index set");
  }
  BipartiteInfluenceInstance inst;
  inst.num_channels_ = num_channels;
  inst.num_customers_ = num_customers;
  inst.by_customer_.resize(num_customers);
  std::set<std::pair<int, int>> seen;
  for (const InfluenceEdge& e : edges) {
    if (e.channel < 0 || e.channel >= num_channels || e.customer < 0 ||
        e.customer >= num_customers) {
      throw InvalidArgument("BipartiteInfluenceInstance: edge index out of range");
    }
    if (!(e.probability > 0.0 && e.probability < 1.0)) {
      std::ostringstream msg;
      msg << "BipartiteInfluenceInstance: probability of edge (" << e.channel
          << ", " << e.customer << ") must lie in (0, 1), got "
          << e.probability;
      throw InvalidArgument(msg.str());
    }
    if (!seen.emplace(e.channel, e.customer).second) {
      std::ostringstream msg;
      msg << "BipartiteInfluenceInstance: duplicate edge (" << e.channel
          << ", " << e.customer << ")";
      throw InvalidArgument(msg.str());
    }
    inst.by_customer_[e.customer].push_back(
        Incoming{e.channel, std::log1p(-e.probability)});
  }
  inst.edges_ = std::move(edges);
  return inst;
}

ValueAndGradient BipartiteInfluenceInstance::EvalGrad(const Point& x) const {
  RequireSize(x, num_channels_, "InfluenceEvalGrad");
  RequireNonNegative(x, "InfluenceEvalGrad");
  ValueAndGradient out{0.0, Point::Zero(num_channels_)};
  for (const auto& incoming : by_customer_) {
    double exponent = 0.0;
    for (const Incoming& in : incoming) exponent += x[in.channel] * in.log_survival;
    const double survive = std::exp(exponent);
    out.value += 1.0 - survive;
    for (const Incoming& in : incoming) {
      out.gradient[in.channel] += -in.log_survival * survive;
    }
  }
  return out;
}

double BipartiteInfluenceInstance::Value(const Point& x) const {
  RequireSize(x, num_channels_, "InfluenceValue");
  RequireNonNegative(x, "InfluenceValue");
  double value = 0.0;
  for (const auto& incoming : by_customer_) {
    double exponent = 0.0;
    for (const Incoming& in : incoming) exponent += x[in.channel] * in.log_survival;
    value += -std::expm1(exponent);
  }
  return value;
}

ValueAndGradient InfluenceEvalGrad(const BipartiteInfluenceInstance& inst,
                                   const Point& x) {
  return inst.EvalGrad(x);
}

Objective MakeInfluenceObjective(const BipartiteInfluenceInstance& inst) {
  auto shared = std::make_shared<const BipartiteInfluenceInstance>(inst);
  ObjectiveFlags flags;
  flags.monotone = true;
  flags.submodular = true;
  flags.dr_submodular = true;
  return Objective(
      "influence", inst.num_channels(),
      [shared](const Point& x) { return shared->Value(x); },
      [shared](const Point& x) { return shared->EvalGrad(x).gradient; },
      flags);
}

BipartiteInfluenceInstance GenBipartiteInfluence(
    int num_channels, int num_customers, std::uint64_t seed,
    const InfluenceGenOptions& options) {
  if (options.edges_per_customer < 1) {
    throw InvalidArgument("GenBipartiteInfluence: edges_per_customer must be >= 1");
  }
  if (!(options.min_probability > 0.0 &&
        options.min_probability <= options.max_probability &&
        options.max_probability < 1.0)) {
    throw InvalidArgument("GenBipartiteInfluence: bad probability range");
  }
  std::mt19937_64 rng = StreamRng(seed, 0);
  std::uniform_real_distribution<double> p_dist(options.min_probability,
                                                options.max_probability);
  const int degree = std::min(options.edges_per_customer, num_channels);
  std::vector<int> channels(num_channels);
  std::vector<InfluenceEdge> edges;
  for (int t = 0; t < num_customers; ++t) {
    std::iota(channels.begin(), channels.end(), 0);
    // Partial Fisher-Yates: the first `degree` entries are a uniform subset.
    for (int k = 0; k < degree; ++k) {
      std::uniform_int_distribution<int> pick(k, num_channels - 1);
      std::swap(channels[k], channels[pick(rng)]);
      edges.push_back(InfluenceEdge{channels[k], t, p_dist(rng)});
    }
  }
  return BipartiteInfluenceInstance::Make(num_channels, num_customers,
                                          std::move(edges));
}

// ---------------------------------------------------------------------------
// Revenue.

RevenueInstance RevenueInstance::Make(int num_nodes,
                                      std::vector<RevenueEdge> edges,
                                      Point self_activation, double alpha,
                                      double beta, double gamma, Point upper) {
  if (num_nodes < 1) throw InvalidArgument("RevenueInstance: no nodes");
  if (self_activation.size() != num_nodes || upper.size() != num_nodes) {
    throw InvalidArgument("RevenueInstance: size mismatch");
  }
  if (!(alpha >= 0.0 && beta >= 0.0 && gamma >= 0.0)) {
    throw InvalidArgument("RevenueInstance: alpha, beta, gamma must be >= 0");
  }
  if (!AllFinite(self_activation) || (self_activation.array() < 0.0).any()) {
    throw InvalidArgument("RevenueInstance: self-activation rates must be >= 0");
  }
  RevenueInstance inst;
  inst.num_nodes_ = num_nodes;
  inst.adjacency_.resize(num_nodes);
  std::set<std::pair<int, int>> seen;
  for (const RevenueEdge& e : edges) {
    if (e.u < 0 || e.u >= num_nodes || e.v < 0 || e.v >= num_nodes ||
        e.u == e.v) {
      throw InvalidArgument("RevenueInstance: bad edge endpoints");
    }
    if (!(e.weight >= 0.0) || !std::isfinite(e.weight)) {
      throw InvalidArgument("RevenueInstance: edge weights must be >= 0");
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      std::ostringstream msg;
      msg << "RevenueInstance: duplicate edge (" << e.u << ", " << e.v << ")";
      throw InvalidArgument(msg.str());
    }
    inst.adjacency_[e.u].push_back(Neighbor{e.v, e.weight});
    inst.adjacency_[e.v].push_back(Neighbor{e.u, e.weight});
  }
  inst.edges_ = std::move(edges);
  inst.self_activation_ = std::move(self_activation);
  inst.alpha_ = alpha;
  inst.beta_ = beta;
  inst.gamma_ = gamma;
  inst.box_ = BoxDomain::Make(Point::Zero(num_nodes), std::move(upper));

  const double sum = inst.Value(inst.box_.lower) + inst.Value(inst.box_.upper);
  if (!(sum >= 0.0)) {
    std::ostringstream msg;
    msg << "RevenueInstance: f(lower) + f(upper) = " << sum << " < 0";
    throw InvalidArgument(msg.str());
  }
  return inst;
}

double RevenueInstance::Value(const Point& x) const {
  RequireSize(x, num_nodes_, "RevenueEval");
  if (!box_.Contains(x, 0.0)) {
    throw InvalidArgument("RevenueEval: point outside the box");
  }
  double influence = 0.0;
  double activation = 0.0;
  double decay = 0.0;
  for (int s = 0; s < num_nodes_; ++s) {
    if (x[s] == 0.0) {
      double inner = 0.0;
      for (const Neighbor& nb : adjacency_[s]) {
        if (x[nb.node] != 0.0) inner += x[nb.node] * nb.weight;
      }
      influence += std::sqrt(inner);
    } else {
      activation += self_activation_[s] * x[s];
      decay -= x[s];
    }
  }
  return alpha_ * influence + beta_ * activation + gamma_ * decay;
}

double RevenueEval(const RevenueInstance& inst, const Point& x) {
  return inst.Value(x);
}

Objective MakeRevenueObjective(const RevenueInstance& inst) {
  auto shared = std::make_shared<const RevenueInstance>(inst);
  ObjectiveFlags flags;
  flags.submodular = true;
  return Objective(
      "revenue", inst.num_nodes(),
      [shared](const Point& x) { return shared->Value(x); }, flags);
}

RevenueInstance GenRevenueOnGraph(int num_nodes,
                                  const std::vector<std::pair<int, int>>& graph,
                                  double alpha, double beta, double gamma,
                                  double upper, std::uint64_t seed) {
  std::mt19937_64 rng = StreamRng(seed, 1);
  std::uniform_real_distribution<double> w_dist(0.0, 1.0);
  std::vector<RevenueEdge> edges;
  edges.reserve(graph.size());
  for (const auto& [u, v] : graph) edges.push_back(RevenueEdge{u, v, w_dist(rng)});
  Point self(num_nodes);
  for (int t = 0; t < num_nodes; ++t) self[t] = w_dist(rng);
  const Point up = Point::Constant(num_nodes, upper);

  // f(0) = 0, and f(upper) = (beta * sum w_tt - gamma * n) * upper.
  int halvings = 0;
  const double activation = self.sum();
  while (beta * activation * upper - gamma * num_nodes * upper < 0.0) {
    gamma *= 0.5;
    ++halvings;
    if (halvings > 200) {
      throw NumericalError("GenRevenue: could not satisfy f(0) + f(upper) >= 0");
    }
  }
  RevenueInstance inst = RevenueInstance::Make(num_nodes, std::move(edges),
                                               std::move(self), alpha, beta,
                                               gamma, up);
  inst.gamma_halvings = halvings;
  return inst;
}

RevenueInstance GenRevenue(int num_nodes, double edge_probability,
                           double alpha, double beta, double gamma,
                           double upper, std::uint64_t seed) {
  if (num_nodes < 1) throw InvalidArgument("GenRevenue: num_nodes must be >= 1");
  std::mt19937_64 rng = StreamRng(seed, 0);
  std::bernoulli_distribution coin(edge_probability);
  std::vector<std::pair<int, int>> graph;
  for (int u = 0; u < num_nodes; ++u) {
    for (int v = u + 1; v < num_nodes; ++v) {
      if (coin(rng)) graph.emplace_back(u, v);
    }
  }
  return GenRevenueOnGraph(num_nodes, graph, alpha, beta, gamma, upper, seed);
}

// ---------------------------------------------------------------------------
// Sensor energy.

SensorInstance SensorInstance::Make(Matrix times, double unit_probability,
                                    std::optional<double> t_inf) {
  if (times.rows() < 1) throw InvalidArgument("SensorInstance: no locations");
  if (!times.allFinite() || (times.array() < 0.0).any()) {
    throw InvalidArgument("SensorInstance: detection times must be >= 0");
  }
  if (!(unit_probability > 0.0 && unit_probability < 1.0)) {
    throw InvalidArgument("SensorInstance: unit probability must lie in (0, 1)");
  }
  SensorInstance inst;
  const double latest = times.size() > 0 ? times.maxCoeff() : 0.0;
  if (t_inf && !(std::isfinite(*t_inf) && *t_inf >= latest)) {
    throw InvalidArgument("SensorInstance: t_inf must be >= every time");
  }
  inst.t_inf_ = t_inf ? *t_inf : latest;
  inst.p_ = unit_probability;
  inst.log_miss_ = std::log1p(-unit_probability);
  inst.order_.resize(times.cols());
  for (Eigen::Index v = 0; v < times.cols(); ++v) {
    std::vector<int>& order = inst.order_[v];
    order.resize(times.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return times(a, v) < times(b, v);
    });
  }
  inst.times_ = std::move(times);
  return inst;
}

ValueAndGradient SensorInstance::EvalGrad(const Point& x) const {
  const int n = num_locations();
  RequireSize(x, n, "SensorEvalGrad");
  RequireNonNegative(x, "SensorEvalGrad");
  ValueAndGradient out{0.0, Point::Zero(n)};
  const int events = num_events();
  if (events == 0) return out;

  // miss_e = (1 - p)^{x_e}; d miss_e / d x_e = ln(1 - p) miss_e.
  Point miss(n);
  for (int e = 0; e < n; ++e) miss[e] = std::exp(x[e] * log_miss_);

  std::vector<double> saved(n), prefix(n), suffix(n);
  for (int v = 0; v < events; ++v) {
    const std::vector<int>& order = order_[v];
    double none_before = 1.0;
    for (int i = 0; i < n; ++i) {
      const int e = order[i];
      saved[i] = t_inf_ - times_(e, v);
      prefix[i] = none_before;
      out.value += saved[i] * (1.0 - miss[e]) * none_before;
      none_before *= miss[e];
    }
    // suffix[i] = expected saved time from sensors after position i given
    // none of 0..i detected.
    double later = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      suffix[i] = later;
      const int e = order[i];
      later = saved[i] * (1.0 - miss[e]) + miss[e] * later;
    }
    for (int i = 0; i < n; ++i) {
      const int e = order[i];
      out.gradient[e] +=
          log_miss_ * miss[e] * prefix[i] * (suffix[i] - saved[i]);
    }
  }
  out.value /= events;
  out.gradient /= events;
  return out;
}

ValueAndGradient SensorEvalGrad(const SensorInstance& inst, const Point& x) {
  return inst.EvalGrad(x);
}

Objective MakeSensorObjective(const SensorInstance& inst) {
  auto shared = std::make_shared<const SensorInstance>(inst);
  ObjectiveFlags flags;
  flags.monotone = true;
  flags.submodular = true;
  flags.dr_submodular = true;
  return Objective(
      "sensor", inst.num_locations(),
      [shared](const Point& x) { return shared->EvalGrad(x).value; },
      [shared](const Point& x) { return shared->EvalGrad(x).gradient; },
      flags);
}

SensorInstance GenSensor(int num_locations, int num_events,
                         double unit_probability, std::uint64_t seed) {
  if (num_locations < 1 || num_events < 1) {
    throw InvalidArgument("GenSensor: sizes must be >= 1");
  }
  std::mt19937_64 rng = StreamRng(seed, 0);
  std::uniform_real_distribution<double> t_dist(0.0, 10.0);
  Matrix times(num_locations, num_events);
  for (int v = 0; v < num_events; ++v) {
    for (int e = 0; e < num_locations; ++e) times(e, v) = t_dist(rng);
  }
  return SensorInstance::Make(std::move(times), unit_probability);
}

// ---------------------------------------------------------------------------
// Summarization.

SummarizationInstance SummarizationInstance::Make(Matrix similarity) {
  if (similarity.rows() != similarity.cols() || similarity.rows() == 0) {
    throw InvalidArgument("SummarizationInstance: similarity must be square");
  }
  if (!similarity.allFinite() || (similarity.array() < 0.0).any()) {
    throw InvalidArgument("SummarizationInstance: similarity must be >= 0");
  }
  if ((similarity - similarity.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    throw InvalidArgument("SummarizationInstance: similarity must be symmetric");
  }
  return SummarizationInstance{std::move(similarity)};
}

ValueAndGradient SummarizationEvalGrad(const SummarizationInstance& inst,
                                       const Point& x) {
  const int n = inst.dimension();
  RequireSize(x, n, "SummarizationEvalGrad");
  RequireNonNegative(x, "SummarizationEvalGrad");
  const Matrix& s = inst.similarity;
  const Point column_sums = s.colwise().sum().transpose();
  const Point sx = s * x;
  ValueAndGradient out{0.0, Point(n)};
  const double slope_at_zero =
      std::sqrt(kSqrtSlopeStepAtZero) / kSqrtSlopeStepAtZero;
  for (int j = 0; j < n; ++j) {
    const double root = std::sqrt(x[j]);
    out.value += root * column_sums[j];
    const double slope = x[j] > 0.0 ? 0.5 / root : slope_at_zero;
    out.gradient[j] = slope * column_sums[j] - 2.0 * sx[j];
  }
  out.value -= x.dot(sx);
  return out;
}

Objective MakeSummarizationObjective(const SummarizationInstance& inst) {
  auto shared = std::make_shared<const SummarizationInstance>(inst);
  ObjectiveFlags flags;
  flags.submodular = true;
  flags.dr_submodular = true;
  return Objective(
      "summarization", inst.dimension(),
      [shared](const Point& x) { return SummarizationEvalGrad(*shared, x).value; },
      [shared](const Point& x) {
        return SummarizationEvalGrad(*shared, x).gradient;
      },
      flags);
}

SummarizationInstance GenSummarization(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("GenSummarization: n must be >= 1");
  std::mt19937_64 rng = StreamRng(seed, 0);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Matrix s(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= j; ++i) {
      s(i, j) = dist(rng);
      s(j, i) = s(i, j);
    }
  }
  return SummarizationInstance::Make(std::move(s));
}

// ---------------------------------------------------------------------------
// Facility location.

FacilityInstance FacilityInstance::Make(Matrix weights) {
  if (weights.rows() < 1) throw InvalidArgument("FacilityInstance: no facilities");
  if (!weights.allFinite() || (weights.array() < 0.0).any()) {
    throw InvalidArgument("FacilityInstance: weights must be >= 0");
  }
  return FacilityInstance{std::move(weights)};
}

double FacilityEval(const FacilityInstance& inst, const Point& x) {
  RequireSize(x, inst.num_facilities(), "FacilityEval");
  RequireNonNegative(x, "FacilityEval");
  const Point response = (-x.array()).exp().matrix();
  double value = 0.0;
  for (Eigen::Index t = 0; t < inst.weights.cols(); ++t) {
    double best = 0.0;
    for (Eigen::Index s = 0; s < inst.weights.rows(); ++s) {
      best = std::max(best, inst.weights(s, t) * (1.0 - response[s]));
    }
    value += best;
  }
  return value;
}

Objective MakeFacilityObjective(const FacilityInstance& inst) {
  auto shared = std::make_shared<const FacilityInstance>(inst);
  ObjectiveFlags flags;
  flags.monotone = true;
  flags.submodular = true;
  return Objective(
      "facility", inst.num_facilities(),
      [shared](const Point& x) { return FacilityEval(*shared, x); }, flags);
}

FacilityInstance GenFacility(int num_facilities, int num_customers,
                             std::uint64_t seed) {
  if (num_facilities < 1 || num_customers < 1) {
    throw InvalidArgument("GenFacility: sizes must be >= 1");
  }
  std::mt19937_64 rng = StreamRng(seed, 0);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Matrix w(num_facilities, num_customers);
  for (int t = 0; t < num_customers; ++t) {
    for (int s = 0; s < num_facilities; ++s) w(s, t) = dist(rng);
  }
  return FacilityInstance::Make(std::move(w));
}

}  // namespace subcont
