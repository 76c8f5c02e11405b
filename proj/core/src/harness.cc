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

#include "subcont/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "subcont/constraint_geometry.h"
#include "subcont/solvers.h"

namespace subcont {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr char kTraceHeader[] = "iteration,t,objective,feasibility_residual";

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool ParseDouble(const std::string& text, double* out) {
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, *out);
  return ec == std::errc() && ptr == end && std::isfinite(*out);
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Lined(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

// ---------------------------------------------------------------------------
// Edge lists.

enum class GraphKind { kInfluence, kRevenue };

struct TsvHeader {
  GraphKind kind = GraphKind::kInfluence;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double upper = 1.0;
};

TsvHeader ParseHeader(const std::string& line, int lineno) {
  std::istringstream tokens(line.substr(1));
  std::string token;
  TsvHeader header;
  bool have_kind = false;
  while (tokens >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) {
      throw TsvError(Lined(lineno, "header token '" + token + "' lacks '='"),
                     lineno);
    }
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "kind") {
      if (value == "influence") {
        header.kind = GraphKind::kInfluence;
      } else if (value == "revenue") {
        header.kind = GraphKind::kRevenue;
      } else {
        throw TsvError(Lined(lineno, "unknown kind '" + value + "'"), lineno);
      }
      have_kind = true;
      continue;
    }
    double* slot = key == "alpha"   ? &header.alpha
                   : key == "beta"  ? &header.beta
                   : key == "gamma" ? &header.gamma
                   : key == "upper" ? &header.upper
                                    : nullptr;
    if (slot == nullptr) {
      throw TsvError(Lined(lineno, "unknown header field '" + key + "'"),
                     lineno);
    }
    if (!ParseDouble(value, slot)) {
      throw TsvError(Lined(lineno, "bad number for '" + key + "'"), lineno);
    }
  }
  if (!have_kind) {
    throw TsvError(Lined(lineno, "header must declare kind=influence|revenue"),
                   lineno);
  }
  return header;
}

int Intern(const std::string& id, std::unordered_map<std::string, int>* index,
           std::vector<std::string>* names) {
  const auto [it, inserted] =
      index->emplace(id, static_cast<int>(names->size()));
  if (inserted) names->push_back(id);
  return it->second;
}

}  // namespace

LoadedGraph LoadBipartiteTsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TsvError("cannot open " + path, 0);

  std::optional<TsvHeader> header;
  std::unordered_map<std::string, int> source_index, target_index;
  std::vector<std::string> source_ids, target_ids;
  std::set<std::pair<int, int>> seen;
  std::vector<InfluenceEdge> influence_edges;
  std::vector<RevenueEdge> revenue_edges;
  std::map<int, double> self_weights;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = Trim(raw);
    if (line.empty()) continue;
    if (!header) {
      if (line[0] != '#') {
        throw TsvError(Lined(lineno, "expected '# kind=influence|revenue'"),
                       lineno);
      }
      header = ParseHeader(line, lineno);
      continue;
    }
    if (line[0] == '#') continue;

    const std::vector<std::string> fields = Split(line, '\t');
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw TsvError(
          Lined(lineno, "expected source<TAB>target<TAB>weight"), lineno);
    }
    double weight = 0.0;
    if (!ParseDouble(fields[2], &weight)) {
      throw TsvError(Lined(lineno, "bad weight '" + fields[2] + "'"), lineno);
    }
    const std::string edge_name = fields[0] + " -> " + fields[1];

    if (header->kind == GraphKind::kInfluence) {
      if (!(weight > 0.0 && weight < 1.0)) {
        throw TsvError(Lined(lineno, "edge " + edge_name + " has weight " +
                                         fields[2] + " outside (0, 1)"),
                       lineno);
      }
      const int s = Intern(fields[0], &source_index, &source_ids);
      const int t = Intern(fields[1], &target_index, &target_ids);
      if (!seen.emplace(s, t).second) {
        throw TsvError(Lined(lineno, "duplicate edge " + edge_name), lineno);
      }
      influence_edges.push_back({s, t, weight});
    } else {
      if (weight < 0.0) {
        throw TsvError(
            Lined(lineno, "edge " + edge_name + " has negative weight"),
            lineno);
      }
      const int s = Intern(fields[0], &source_index, &source_ids);
      const int t = Intern(fields[1], &source_index, &source_ids);
      if (!seen.emplace(std::min(s, t), std::max(s, t)).second) {
        throw TsvError(Lined(lineno, "duplicate edge " + edge_name), lineno);
      }
      if (s == t) {
        self_weights[s] = weight;
      } else {
        revenue_edges.push_back({s, t, weight});
      }
    }
  }
  if (!header) throw TsvError("empty file " + path, 0);
  if (seen.empty()) throw TsvError("no edges", 0);

  if (header->kind == GraphKind::kInfluence) {
    return LoadedGraph{
        BipartiteInfluenceInstance::Make(static_cast<int>(source_ids.size()),
                                         static_cast<int>(target_ids.size()),
                                         std::move(influence_edges)),
        std::move(source_ids), std::move(target_ids)};
  }
  const int n = static_cast<int>(source_ids.size());
  Point self = Point::Zero(n);
  for (const auto& [node, w] : self_weights) self[node] = w;
  return LoadedGraph{
      RevenueInstance::Make(n, std::move(revenue_edges), self, header->alpha,
                            header->beta, header->gamma,
                            Point::Constant(n, header->upper)),
      std::move(source_ids), {}};
}

// ---------------------------------------------------------------------------
// Grid oracle.

GridOptimum GridBruteForce(const Objective& f, const Domain& domain,
                           int points_per_dim) {
  const PolytopeDomain* polytope = std::get_if<PolytopeDomain>(&domain);
  const BoxDomain box =
      polytope ? polytope->BoundingBox() : std::get<BoxDomain>(domain);
  const int n = box.dimension();
  if (n != f.dimension()) {
    throw InvalidArgument("GridBruteForce: domain dimension mismatch");
  }
  if (n < 1 || n > kGridMaxDimension) {
    throw InvalidArgument("GridBruteForce: dimension must lie in [1, " +
                          std::to_string(kGridMaxDimension) + "]");
  }
  if (points_per_dim < 1 ||
      std::pow(static_cast<double>(points_per_dim), n) > kGridPointLimit) {
    throw InvalidArgument("GridBruteForce: points_per_dim^n exceeds 1e8");
  }

  std::vector<std::vector<double>> axis(n);
  for (int i = 0; i < n; ++i) {
    axis[i].resize(points_per_dim);
    const double width = box.upper[i] - box.lower[i];
    for (int k = 0; k < points_per_dim; ++k) {
      axis[i][k] = points_per_dim == 1
                       ? box.lower[i]
                       : box.lower[i] + width * (static_cast<double>(k) /
                                                 (points_per_dim - 1));
    }
  }

  GridOptimum best;
  std::vector<int> idx(n, 0);
  Point x(n);
  for (int i = 0; i < n; ++i) x[i] = axis[i][0];
  while (true) {
    if (!polytope || Contains(*polytope, x, kFeasibilityTolerance)) {
      const double value = f.Value(x);
      if (best.evaluated == 0 || value > best.f_star) {
        best.f_star = value;
        best.x_star = x;
      }
      ++best.evaluated;
    }
    int i = 0;
    while (i < n && ++idx[i] == points_per_dim) {
      idx[i] = 0;
      x[i] = axis[i][0];
      ++i;
    }
    if (i == n) break;
    x[i] = axis[i][idx[i]];
  }
  if (best.evaluated == 0) {
    throw NumericalError("GridBruteForce: no grid point lies in the domain");
  }
  return best;
}

// ---------------------------------------------------------------------------
// Named functions.

std::vector<std::string> ZooNames() {
  return {"product",   "monotone_nqp", "nonmonotone_nqp", "influence",
          "revenue",   "sensor",       "summarization",   "facility"};
}

ZooFunction MakeZooFunction(const std::string& name, int n,
                            std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("MakeZooFunction: n must be >= 1");
  const BoxDomain unit = BoxDomain::Unit(n);
  if (name == "product") {
    if (n < 2) throw InvalidArgument("product needs n >= 2");
    ObjectiveFlags flags;
    flags.monotone = true;
    Objective f(
        "product", n, [](const Point& x) { return x[0] * x[1]; },
        [n](const Point& x) {
          Point g = Point::Zero(n);
          g[0] = x[1];
          g[1] = x[0];
          return g;
        },
        flags);
    return {std::move(f), unit};
  }
  if (name == "monotone_nqp") {
    MonotoneNqp inst = GenMonotoneNqp(n, std::max(1, n / 2), seed);
    return {MakeQuadraticObjective(inst.instance, true, name), inst.polytope};
  }
  if (name == "nonmonotone_nqp") {
    NonmonotoneNqp inst = GenNonmonotoneNqp(n, seed);
    return {MakeQuadraticObjective(inst.instance, false, name), inst.box};
  }
  if (name == "influence") {
    return {MakeInfluenceObjective(GenBipartiteInfluence(n, 2 * n, seed)),
            unit};
  }
  if (name == "revenue") {
    RevenueInstance inst = GenRevenue(n, 0.5, 1.0, 1.0, 1.0, 1.0, seed);
    const BoxDomain box = inst.box();
    return {MakeRevenueObjective(inst), box};
  }
  if (name == "sensor") {
    return {MakeSensorObjective(GenSensor(n, 2 * n, 0.3, seed)), unit};
  }
  if (name == "summarization") {
    return {MakeSummarizationObjective(GenSummarization(n, seed)), unit};
  }
  if (name == "facility") {
    return {MakeFacilityObjective(GenFacility(n, 2 * n, seed)), unit};
  }
  if (!fs::exists(name)) {
    throw InvalidArgument("unknown function '" + name +
                          "' (not a zoo name or an existing file)");
  }
  LoadedGraph graph = LoadBipartiteTsv(name);
  if (auto* inf = std::get_if<BipartiteInfluenceInstance>(&graph.instance)) {
    return {MakeInfluenceObjective(*inf),
            BoxDomain::Unit(inf->num_channels())};
  }
  const auto& rev = std::get<RevenueInstance>(graph.instance);
  return {MakeRevenueObjective(rev), rev.box()};
}

// ---------------------------------------------------------------------------
// Property checks by name.

std::vector<std::string> PropertyNames() {
  return {"submodular", "weak-dr", "dr", "coordconcave", "monotone"};
}

PropertyReport RunPropertyCheck(const Objective& f, const BoxDomain& box,
                                const std::string& property, int trials,
                                double tol, std::uint64_t seed) {
  if (property == "submodular") return CheckSubmodular(f, box, trials, tol, seed);
  if (property == "weak-dr") return CheckWeakDr(f, box, trials, tol, seed);
  if (property == "dr") return CheckDr(f, box, trials, tol, seed);
  if (property == "coordconcave") {
    return CheckCoordinatewiseConcave(f, box, trials, tol, seed);
  }
  if (property == "monotone") return CheckMonotone(f, box, trials, tol, seed);
  throw InvalidArgument("unknown property '" + property + "'");
}

namespace {

json PointJson(const Point& x) {
  json arr = json::array();
  for (int i = 0; i < x.size(); ++i) arr.push_back(x[i]);
  return arr;
}

json ReportJson(const PropertyReport& report) {
  json witness = json::array();
  for (const Point& p : report.witness) witness.push_back(PointJson(p));
  return json{{"property", report.property},
              {"verdict", VerdictName(report.verdict)},
              {"trials", report.trials},
              {"worst_violation", report.worst_violation},
              {"witness", witness},
              {"witness_description", report.witness_description},
              {"witness_coordinate", report.witness_coordinate}};
}

}  // namespace

std::string PropertyReportJson(const PropertyReport& report) {
  return ReportJson(report).dump(2);
}

// ---------------------------------------------------------------------------
// Trace files.

void WriteTraceCsv(const std::string& path, const SolverTrace& trace) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << kTraceHeader << '\n';
  for (const TraceRecord& r : trace.records()) {
    out << r.iteration << ',' << FormatDouble(r.t) << ','
        << FormatDouble(r.objective) << ','
        << FormatDouble(r.feasibility_residual) << '\n';
  }
  if (!out) throw NumericalError("write failed for " + path);
}

SolverTrace ReadTraceCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != kTraceHeader) {
    throw InvalidArgument(path + ": missing trace header");
  }
  SolverTrace trace;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::vector<std::string> f = Split(line, ',');
    TraceRecord r;
    if (f.size() != 4 || !ParseDouble(f[1], &r.t) ||
        !ParseDouble(f[2], &r.objective) ||
        !ParseDouble(f[3], &r.feasibility_residual)) {
      throw InvalidArgument(path + ": " + Lined(lineno, "malformed row"));
    }
    r.iteration = std::stoi(f[0]);
    trace.Append(r);
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Experiments.

const char* ExperimentName(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kMonotoneNqp: return "monotone_nqp";
    case ExperimentKind::kNonmonotoneNqp: return "nonmonotone_nqp";
    case ExperimentKind::kBudgetAllocation: return "budget_allocation";
    case ExperimentKind::kRevenue: return "revenue";
    case ExperimentKind::kPropertyCheck: return "property_check";
  }
  return "?";
}

ExperimentKind ParseExperiment(const std::string& name) {
  for (ExperimentKind k :
       {ExperimentKind::kMonotoneNqp, ExperimentKind::kNonmonotoneNqp,
        ExperimentKind::kBudgetAllocation, ExperimentKind::kRevenue,
        ExperimentKind::kPropertyCheck}) {
    if (name == ExperimentName(k)) return k;
  }
  throw InvalidArgument("unknown experiment '" + name + "'");
}

std::uint64_t BaseSeedFromEnv(std::uint64_t fallback) {
  const char* env = std::getenv("SUBCONT_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::uint64_t seed = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [ptr, ec] = std::from_chars(env, end, seed);
  if (ec != std::errc() || ptr != end) {
    throw InvalidArgument(std::string("SUBCONT_SEED is not an unsigned "
                                      "integer: ") + env);
  }
  return seed;
}

namespace {

std::string ProjGradName(double step) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "proj_grad_%g", step);
  return buf;
}

}  // namespace

std::vector<std::string> DefaultMethods(ExperimentKind kind,
                                        const std::vector<double>& steps) {
  std::vector<std::string> methods;
  switch (kind) {
    case ExperimentKind::kMonotoneNqp:
      methods = {"frank_wolfe", "random", "random_cube"};
      break;
    case ExperimentKind::kBudgetAllocation:
      methods = {"frank_wolfe", "random_cube"};
      break;
    case ExperimentKind::kNonmonotoneNqp:
      methods = {"double_greedy", "random", "single_greedy"};
      break;
    case ExperimentKind::kRevenue:
      return {"double_greedy", "single_greedy", "random"};
    case ExperimentKind::kPropertyCheck:
      return {};
  }
  for (double s : steps) methods.push_back(ProjGradName(s));
  return methods;
}

std::vector<double> DefaultSweep(ExperimentKind kind, int n) {
  switch (kind) {
    case ExperimentKind::kBudgetAllocation:
      return {0.1 * n, 0.2 * n, 0.3 * n, 0.4 * n};
    case ExperimentKind::kPropertyCheck:
      return {};
    default:
      return {0.5, 1.0, 1.5, 2.0};
  }
}

const char* SweepVariable(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kMonotoneNqp: return "b";
    case ExperimentKind::kBudgetAllocation: return "budget";
    case ExperimentKind::kNonmonotoneNqp:
    case ExperimentKind::kRevenue: return "upper";
    case ExperimentKind::kPropertyCheck: return "none";
  }
  return "?";
}

void ExperimentConfig::Validate() const {
  const auto fail = [](const std::string& what) {
    throw InvalidArgument("ExperimentConfig: " + what);
  };
  if (n < 1) fail("n must be >= 1");
  if (m < 0) fail("m must be >= 0");
  if (seeds.empty()) fail("at least one seed is required");
  if (iterations < 1) fail("K must be >= 1");
  if (!(gamma <= 1.0) || !std::isfinite(gamma)) fail("gamma must be <= 1");
  if (!(delta >= 0.0) || !std::isfinite(delta)) fail("delta must be >= 0");
  for (double s : steps) {
    if (!(s > 0.0) || !std::isfinite(s)) fail("ProjGrad steps must be > 0");
  }
  if (k_s < 1) fail("k_s must be >= 1");
  if (output_dir.empty()) fail("output directory is required");
  for (double v : sweep) {
    if (!(v > 0.0) || !std::isfinite(v)) fail("sweep values must be > 0");
  }
  if (grid_points < 0) fail("grid points must be >= 0");
  if (grid_points > 0 && n > kGridMaxDimension) {
    fail("the grid oracle needs n <= " + std::to_string(kGridMaxDimension));
  }
  if (!(alpha >= 0.0 && beta >= 0.0 && revenue_gamma >= 0.0)) {
    fail("revenue alpha, beta, gamma must be >= 0");
  }
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    fail("edge probability must lie in [0, 1]");
  }
  if (trials < 1) fail("trials must be >= 1");
  if (experiment == ExperimentKind::kPropertyCheck) {
    const std::vector<std::string> known = PropertyNames();
    for (const std::string& p : properties) {
      if (std::find(known.begin(), known.end(), p) == known.end()) {
        fail("unknown property '" + p + "'");
      }
    }
    return;
  }
  if (experiment == ExperimentKind::kMonotoneNqp && m < 1) {
    fail("monotone_nqp needs m >= 1");
  }
  if (data_path && experiment != ExperimentKind::kBudgetAllocation &&
      experiment != ExperimentKind::kRevenue) {
    fail("--data applies to budget_allocation and revenue only");
  }
  std::vector<std::string> allowed = DefaultMethods(experiment, steps);
  if (experiment == ExperimentKind::kBudgetAllocation) {
    allowed.push_back("random");
  }
  for (const std::string& method : methods) {
    const bool projgrad = method.rfind("proj_grad_", 0) == 0 &&
                          experiment != ExperimentKind::kRevenue;
    if (!projgrad &&
        std::find(allowed.begin(), allowed.end(), method) == allowed.end()) {
      fail("method '" + method + "' does not apply to " +
           ExperimentName(experiment));
    }
  }
}

namespace {

// One instance at one sweep point.
struct Problem {
  Objective objective;
  Domain domain;
  OneDimMode mode = OneDimMode::kQuadraticClosedForm;
};

class ProblemFactory {
 public:
  explicit ProblemFactory(const ExperimentConfig& config) : config_(config) {
    if (config.data_path) loaded_ = LoadBipartiteTsv(*config.data_path);
    if (loaded_ && config.experiment == ExperimentKind::kBudgetAllocation &&
        !std::holds_alternative<BipartiteInfluenceInstance>(
            loaded_->instance)) {
      throw InvalidArgument("budget_allocation needs a kind=influence file");
    }
    if (loaded_ && config.experiment == ExperimentKind::kRevenue &&
        !std::holds_alternative<RevenueInstance>(loaded_->instance)) {
      throw InvalidArgument("revenue needs a kind=revenue file");
    }
  }

  Problem Build(std::uint64_t seed, double sweep_value) {
    const ExperimentConfig& c = config_;
    switch (c.experiment) {
      case ExperimentKind::kMonotoneNqp: {
        auto it = monotone_cache_.find(seed);
        if (it == monotone_cache_.end()) {
          it = monotone_cache_.emplace(seed, GenMonotoneNqp(c.n, c.m, seed))
                   .first;
        }
        MonotoneNqp inst = RescaleMonotoneNqp(it->second, sweep_value, 1.0);
        return {MakeQuadraticObjective(inst.instance, true, "monotone_nqp"),
                inst.polytope};
      }
      case ExperimentKind::kNonmonotoneNqp: {
        NonmonotoneNqpOptions options;
        options.upper = sweep_value;
        NonmonotoneNqp inst = GenNonmonotoneNqp(c.n, seed, options);
        return {MakeQuadraticObjective(inst.instance, false, "nonmonotone_nqp"),
                inst.box};
      }
      case ExperimentKind::kBudgetAllocation: {
        const BipartiteInfluenceInstance inst =
            loaded_ ? std::get<BipartiteInfluenceInstance>(loaded_->instance)
                    : GenBipartiteInfluence(c.n, std::max(1, c.m), seed);
        const int n = inst.num_channels();
        return {MakeInfluenceObjective(inst),
                PolytopeDomain::Make(Matrix::Ones(1, n),
                                     Point::Constant(1, sweep_value),
                                     Point::Ones(n))};
      }
      case ExperimentKind::kRevenue: {
        RevenueInstance inst =
            loaded_ ? Reupper(std::get<RevenueInstance>(loaded_->instance),
                              sweep_value)
                    : GenRevenue(c.n, c.edge_probability, c.alpha, c.beta,
                                 c.revenue_gamma, sweep_value, seed);
        const BoxDomain box = inst.box();
        return {MakeRevenueObjective(inst), box,
                OneDimMode::kRevenueDiscontinuous};
      }
      case ExperimentKind::kPropertyCheck:
        break;
    }
    throw InvalidArgument("no instances for property_check");
  }

 private:
  static RevenueInstance Reupper(const RevenueInstance& base, double upper) {
    return RevenueInstance::Make(base.num_nodes(), base.edges(),
                                 base.self_activation(), base.alpha(),
                                 base.beta(), base.gamma(),
                                 Point::Constant(base.num_nodes(), upper));
  }

  const ExperimentConfig& config_;
  std::optional<LoadedGraph> loaded_;
  std::map<std::uint64_t, MonotoneNqp> monotone_cache_;
};

struct MethodOutcome {
  double final_value = 0.0;
  SolverTrace trace;
  double step_sum = 0.0;
  double max_residual = 0.0;
};

PolytopeDomain AsPolytope(const Domain& domain) {
  if (const auto* p = std::get_if<PolytopeDomain>(&domain)) return *p;
  const BoxDomain& box = std::get<BoxDomain>(domain);
  if (!box.lower.isZero(0.0)) {
    throw InvalidArgument("sampling baselines need a box with lower = 0");
  }
  return PolytopeDomain::Box(box.upper);
}

MethodOutcome RunMethod(const std::string& method, const Problem& problem,
                        const ExperimentConfig& c, std::uint64_t seed) {
  MethodOutcome out;
  const auto adopt = [&out](BaselineResult r) {
    out.final_value = r.trace.back().objective;
    out.trace = std::move(r.trace);
  };
  if (method == "frank_wolfe") {
    FWConfig fw;
    fw.gamma = c.gamma > 0.0 ? c.gamma : 1.0 / c.iterations;
    fw.delta = c.delta;
    FWResult r = FrankWolfeVariant(problem.objective,
                                   std::get<PolytopeDomain>(problem.domain), fw);
    out.final_value = r.trace.back().objective;
    out.trace = std::move(r.trace);
    out.step_sum = r.step_sum;
    out.max_residual = r.max_feasibility_residual;
    return out;
  }
  if (method == "double_greedy" || method == "single_greedy") {
    const BoxDomain& box = std::get<BoxDomain>(problem.domain);
    const std::vector<int> order = RandomOrder(box.dimension(), seed);
    if (method == "single_greedy") {
      adopt(SingleGreedy(problem.objective, box, order, problem.mode));
      return out;
    }
    DGConfig dg;
    dg.order = order;
    dg.seed = seed;
    dg.delta = c.delta;
    dg.mode = problem.mode;
    DGResult r = DoubleGreedy(problem.objective, box, dg);
    out.final_value = r.trace_x.back().objective;
    out.trace = std::move(r.trace_x);
    return out;
  }
  if (method == "random") {
    adopt(RandomBestOf(problem.objective, AsPolytope(problem.domain), c.k_s,
                       seed));
    return out;
  }
  if (method == "random_cube") {
    adopt(RandomCubeBaseline(problem.objective, AsPolytope(problem.domain),
                             c.k_s, seed));
    return out;
  }
  if (method.rfind("proj_grad_", 0) == 0) {
    double step = 0.0;
    if (!ParseDouble(method.substr(10), &step)) {
      throw InvalidArgument("bad ProjGrad method name '" + method + "'");
    }
    int iters = c.projgrad_iterations;
    if (iters <= 0) {
      const bool monotone = c.experiment == ExperimentKind::kMonotoneNqp ||
                            c.experiment == ExperimentKind::kBudgetAllocation;
      iters = monotone ? c.iterations : problem.objective.dimension();
    }
    adopt(ProjGradAscent(problem.objective, problem.domain, step, iters));
    return out;
  }
  throw InvalidArgument("unknown method '" + method + "'");
}

json ManifestJson(const ExperimentConfig& c,
                  const std::vector<std::string>& methods,
                  const std::vector<double>& sweep) {
  json seeds = json::array();
  for (std::uint64_t s : c.seeds) seeds.push_back(s);
  json m{{"experiment", ExperimentName(c.experiment)},
         {"status", "running"},
         {"n", c.n},
         {"m", c.m},
         {"seeds", seeds},
         {"K", c.iterations},
         {"gamma", c.gamma > 0.0 ? c.gamma : 1.0 / c.iterations},
         {"delta", c.delta},
         {"steps", c.steps},
         {"steps_are_default_grid", c.steps == kDefaultProjGradSteps},
         {"projgrad_iterations", c.projgrad_iterations},
         {"k_s", c.k_s},
         {"data_path", c.data_path ? json(*c.data_path) : json(nullptr)},
         {"sweep_variable", SweepVariable(c.experiment)},
         {"sweep", sweep},
         {"methods", methods},
         {"grid_points", c.grid_points},
         {"trace_header", kTraceHeader}};
  if (c.experiment == ExperimentKind::kRevenue) {
    m["revenue"] = {{"alpha", c.alpha},
                    {"beta", c.beta},
                    {"gamma", c.revenue_gamma},
                    {"edge_probability", c.edge_probability}};
  }
  if (c.experiment == ExperimentKind::kPropertyCheck) {
    m["function"] = c.function;
    m["properties"] = c.properties.empty() ? PropertyNames() : c.properties;
    m["trials"] = c.trials;
    m["tolerance"] = c.tolerance;
  }
  return m;
}

void WriteJson(const fs::path& path, const json& value) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << value.dump(2) << '\n';
}

double Mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / v.size();
}

// Sample standard deviation; zero for fewer than two values.
double StdDev(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double mu = Mean(v);
  double s = 0.0;
  for (double x : v) s += (x - mu) * (x - mu);
  return std::sqrt(s / (v.size() - 1));
}

json SummaryJson(const ExperimentConfig& c, const std::vector<double>& sweep,
                 const std::vector<std::string>& methods,
                 const std::vector<ResultRecord>& records) {
  json points = json::array();
  for (double value : sweep) {
    json per_method = json::object();
    std::vector<double> grid;
    for (const std::string& method : methods) {
      std::vector<double> finals;
      json paths = json::array();
      for (const ResultRecord& r : records) {
        if (r.method != method || r.sweep_value != value) continue;
        finals.push_back(r.final_value);
        paths.push_back(r.trace_path);
      }
      if (finals.empty()) continue;
      per_method[method] = {{"mean", Mean(finals)},
                            {"std", StdDev(finals)},
                            {"count", finals.size()},
                            {"final_values", finals},
                            {"trace_paths", paths}};
    }
    std::set<std::uint64_t> seen;
    for (const ResultRecord& r : records) {
      if (r.sweep_value == value && r.f_star_grid &&
          seen.insert(r.instance_seed).second) {
        grid.push_back(*r.f_star_grid);
      }
    }
    json point{{"value", value}, {"methods", per_method}};
    if (!grid.empty()) point["f_star_grid"] = grid;
    points.push_back(point);
  }
  return json{{"experiment", ExperimentName(c.experiment)},
              {"sweep_variable", SweepVariable(c.experiment)},
              {"points", points}};
}

std::vector<ResultRecord> RunPropertyExperiment(const ExperimentConfig& c,
                                                const fs::path& dir) {
  const ZooFunction zoo = MakeZooFunction(c.function, c.n, c.seeds.front());
  const BoxDomain box =
      std::holds_alternative<BoxDomain>(zoo.domain)
          ? std::get<BoxDomain>(zoo.domain)
          : std::get<PolytopeDomain>(zoo.domain).BoundingBox();
  json reports = json::array();
  const std::vector<std::string> properties =
      c.properties.empty() ? PropertyNames() : c.properties;
  for (const std::string& p : properties) {
    reports.push_back(ReportJson(RunPropertyCheck(
        zoo.objective, box, p, c.trials, c.tolerance, c.seeds.front())));
  }
  WriteJson(dir / "summary.json",
            json{{"experiment", "property_check"},
                 {"function", c.function},
                 {"n", zoo.objective.dimension()},
                 {"reports", reports}});
  return {};
}

}  // namespace

std::vector<ResultRecord> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const fs::path dir(config.output_dir);
  fs::create_directories(dir / "traces");

  const std::vector<std::string> methods =
      config.methods.empty() ? DefaultMethods(config.experiment, config.steps)
                             : config.methods;
  const std::vector<double> sweep =
      config.sweep.empty() ? DefaultSweep(config.experiment, config.n)
                           : config.sweep;
  json manifest = ManifestJson(config, methods, sweep);
  WriteJson(dir / "manifest.json", manifest);

  std::vector<ResultRecord> records;
  try {
    if (config.experiment == ExperimentKind::kPropertyCheck) {
      records = RunPropertyExperiment(config, dir);
    } else {
      ProblemFactory factory(config);
      for (std::size_t p = 0; p < sweep.size(); ++p) {
        for (std::uint64_t seed : config.seeds) {
          const Problem problem = factory.Build(seed, sweep[p]);
          std::optional<double> f_star;
          if (config.grid_points > 0) {
            f_star = GridBruteForce(problem.objective, problem.domain,
                                    config.grid_points)
                         .f_star;
          }
          for (const std::string& method : methods) {
            const std::string rel = "traces/" + method + "_p" +
                                    std::to_string(p) + "_s" +
                                    std::to_string(seed) + ".csv";
            const auto start = std::chrono::steady_clock::now();
            MethodOutcome outcome;
            try {
              outcome = RunMethod(method, problem, config, seed);
            } catch (const SolverError& e) {
              WriteTraceCsv((dir / (rel + ".partial")).string(),
                            e.partial_trace());
              throw;
            }
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            WriteTraceCsv((dir / rel).string(), outcome.trace);
            ResultRecord r;
            r.method = method;
            r.instance_seed = seed;
            r.sweep_value = sweep[p];
            r.final_value = outcome.final_value;
            r.trace_path = rel;
            r.wall_time = elapsed.count();
            r.step_sum = outcome.step_sum;
            r.max_feasibility_residual = outcome.max_residual;
            r.f_star_grid = f_star;
            records.push_back(std::move(r));
          }
        }
      }
      WriteJson(dir / "summary.json",
                SummaryJson(config, sweep, methods, records));
    }
  } catch (const std::exception& e) {
    manifest["status"] = "failed";
    manifest["error"] = e.what();
    manifest["completed_runs"] = records.size();
    WriteJson(dir / "manifest.json", manifest);
    throw;
  }
  manifest["status"] = "ok";
  manifest["completed_runs"] = records.size();
  WriteJson(dir / "manifest.json", manifest);
  return records;
}

}  // namespace subcont
