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
// Experiment plumbing: edge-list ingestion, the grid brute-force oracle, a
// registry of named test functions and the sweep runner that writes trace
// CSVs, a summary JSON and a run manifest.
//
// Output layout of RunExperiment under `output_dir`:
//   manifest.json            written first, rewritten with the final status
//   traces/<method>_p<i>_s<seed>.csv
//   summary.json             per-method mean/std of final values per point
//

#ifndef SUBCONT_HARNESS_H_
#define SUBCONT_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subcont/baselines.h"
#include "subcont/core_model.h"
#include "subcont/function_zoo.h"
#include "subcont/property_suite.h"

namespace subcont {

// ---------------------------------------------------------------------------
// Edge lists.
//
// A header line `# kind=influence` or `# kind=revenue` comes first; revenue
// headers may add `alpha=`, `beta=`, `gamma=` and `upper=` fields. Every other
// non-blank line reads `source<TAB>target<TAB>weight`. Influence sources are
// channels and targets customers, each with their own id space. Revenue ids
// share one space and a line `s<TAB>s<TAB>w` sets the self-activation w_ss.

class TsvError : public InvalidArgument {
 public:
  TsvError(const std::string& what, int line)
      : InvalidArgument(what), line_(line) {}
  // 1-based; 0 when the error concerns the whole file.
  int line() const { return line_; }

 private:
  int line_;
};

struct LoadedGraph {
  std::variant<BipartiteInfluenceInstance, RevenueInstance> instance;
  // Dense index -> original id. Revenue instances fill only source_ids.
  std::vector<std::string> source_ids;
  std::vector<std::string> target_ids;
};

LoadedGraph LoadBipartiteTsv(const std::string& path);

// ---------------------------------------------------------------------------
// Grid oracle.

struct GridOptimum {
  Point x_star;
  double f_star = 0.0;
  long long evaluated = 0;  // grid points inside the domain
};

inline constexpr double kGridPointLimit = 1e8;
inline constexpr int kGridMaxDimension = 6;

// Exhaustive scan of the uniform grid with `points_per_dim` points per axis
// over the box (the bounding box for polytopes, filtered by Contains).
GridOptimum GridBruteForce(const Objective& f, const Domain& domain,
                           int points_per_dim);

// ---------------------------------------------------------------------------
// Named functions for the CLI.

struct ZooFunction {
  Objective objective;
  Domain domain;
};

// Names: product (x_1 x_2 on the unit box), monotone_nqp, nonmonotone_nqp,
// influence, revenue, sensor, summarization, facility. Anything else is read
// as a path to an edge list.
ZooFunction MakeZooFunction(const std::string& name, int n, std::uint64_t seed);
std::vector<std::string> ZooNames();

// ---------------------------------------------------------------------------
// Experiments.

enum class ExperimentKind {
  kMonotoneNqp,
  kNonmonotoneNqp,
  kBudgetAllocation,
  kRevenue,
  kPropertyCheck,
};

const char* ExperimentName(ExperimentKind kind);
ExperimentKind ParseExperiment(const std::string& name);

inline constexpr std::uint64_t kDefaultBaseSeed = 2017;

// Reads SUBCONT_SEED, falling back to `fallback`.
std::uint64_t BaseSeedFromEnv(std::uint64_t fallback = kDefaultBaseSeed);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kMonotoneNqp;
  int n = 100;
  int m = 50;
  // Instance seeds; the CLI fills base + index.
  std::vector<std::uint64_t> seeds;
  int iterations = 50;  // K
  double gamma = 0.0;   // <= 0 means 1 / K
  double delta = 0.0;
  std::vector<double> steps = kDefaultProjGradSteps;
  int projgrad_iterations = 0;  // <= 0: K for monotone, n otherwise
  int k_s = 1000;
  std::optional<std::string> data_path;
  std::string output_dir;
  // Sweep values; empty selects the per-experiment default.
  std::vector<double> sweep;
  // Method subset; empty runs every method of the experiment.
  std::vector<std::string> methods;
  // Grid oracle points per dimension for box experiments; 0 disables.
  int grid_points = 0;

  // Revenue model.
  double alpha = 10.0;
  double beta = 10.0;
  double revenue_gamma = 10.0;
  double edge_probability = 0.05;

  // Property checks.
  std::string function = "product";
  std::vector<std::string> properties;  // empty -> all five
  int trials = 500;
  double tolerance = kDefaultPropertyTolerance;

  void Validate() const;
};

std::vector<std::string> DefaultMethods(ExperimentKind kind,
                                        const std::vector<double>& steps);
std::vector<double> DefaultSweep(ExperimentKind kind, int n);
const char* SweepVariable(ExperimentKind kind);

struct ResultRecord {
  std::string method;
  std::uint64_t instance_seed = 0;
  double sweep_value = 0.0;
  double final_value = 0.0;
  std::string trace_path;  // relative to output_dir
  double wall_time = 0.0;  // seconds
  // Frank-Wolfe only.
  double step_sum = 0.0;
  double max_feasibility_residual = 0.0;
  // Grid optimum of the instance when the oracle ran.
  std::optional<double> f_star_grid;
};

// Runs the sweep and writes the output layout above. Throws after marking
// the manifest when a solver fails; files written so far are kept.
std::vector<ResultRecord> RunExperiment(const ExperimentConfig& config);

// Property checks by name: submodular, weak-dr, dr, coordconcave, monotone.
PropertyReport RunPropertyCheck(const Objective& f, const BoxDomain& box,
                                const std::string& property, int trials,
                                double tol, std::uint64_t seed);
std::vector<std::string> PropertyNames();

// JSON text of a report, as written by the property_check experiment.
std::string PropertyReportJson(const PropertyReport& report);

// `iteration,t,objective,feasibility_residual` with round-trip precision.
void WriteTraceCsv(const std::string& path, const SolverTrace& trace);
SolverTrace ReadTraceCsv(const std::string& path);

}  // namespace subcont

#endif  // SUBCONT_HARNESS_H_
