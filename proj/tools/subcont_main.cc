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

// subcont: run experiments, check properties, brute-force small instances.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcont/harness.h"

namespace {

std::string JoinNames(const std::vector<std::string>& names) {
  std::string out;
  for (const std::string& n : names) out += (out.empty() ? "" : "|") + n;
  return out;
}

std::string PointText(const subcont::Point& x) {
  std::string out = "[";
  for (int i = 0; i < x.size(); ++i) {
    out += (i ? ", " : "") + std::to_string(x[i]);
  }
  return out + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximization of submodular continuous functions"};
  app.require_subcommand(1);

  // run
  subcont::ExperimentConfig cfg;
  std::string experiment = "monotone_nqp";
  int num_seeds = 20;
  std::optional<std::uint64_t> base_seed;
  std::string data;
  CLI::App* run = app.add_subcommand("run", "Run an experiment sweep");
  run->add_option("--experiment", experiment,
                  "monotone_nqp|nonmonotone_nqp|budget_allocation|revenue|"
                  "property_check")
      ->required();
  run->add_option("--n", cfg.n, "Dimension")->capture_default_str();
  run->add_option("--m", cfg.m, "Constraint rows, or customers for "
                                "budget_allocation")
      ->capture_default_str();
  run->add_option("--K", cfg.iterations, "Frank-Wolfe iterations")
      ->capture_default_str();
  run->add_option("--gamma", cfg.gamma, "Frank-Wolfe step (default 1/K)");
  run->add_option("--delta", cfg.delta, "Declared oracle error")
      ->capture_default_str();
  run->add_option("--seeds", num_seeds, "Number of instances")
      ->capture_default_str();
  run->add_option("--seed", base_seed,
                  "Base seed (default: SUBCONT_SEED or 2017)");
  run->add_option("--ks", cfg.k_s, "Samples for the Random baselines")
      ->capture_default_str();
  run->add_option("--steps", cfg.steps, "ProjGrad step sizes")
      ->delimiter(',');
  run->add_option("--projgrad-iters", cfg.projgrad_iterations,
                  "ProjGrad iterations (default K, or n for box problems)");
  run->add_option("--sweep", cfg.sweep, "Sweep values")->delimiter(',');
  run->add_option("--methods", cfg.methods, "Method subset")->delimiter(',');
  run->add_option("--grid", cfg.grid_points,
                  "Grid oracle points per dimension (0 = off)");
  run->add_option("--alpha", cfg.alpha, "Revenue alpha")->capture_default_str();
  run->add_option("--beta", cfg.beta, "Revenue beta")->capture_default_str();
  run->add_option("--revenue-gamma", cfg.revenue_gamma, "Revenue gamma")
      ->capture_default_str();
  run->add_option("--edge-prob", cfg.edge_probability,
                  "Edge probability of generated revenue graphs")
      ->capture_default_str();
  run->add_option("--function", cfg.function, "property_check function")
      ->capture_default_str();
  run->add_option("--property", cfg.properties, "property_check properties")
      ->delimiter(',');
  run->add_option("--trials", cfg.trials, "property_check trials")
      ->capture_default_str();
  run->add_option("--data", data, "Edge-list TSV");
  run->add_option("--out", cfg.output_dir, "Output directory")->required();

  // check
  std::string check_function;
  std::string check_property = "all";
  int check_trials = 500;
  int check_n = 4;
  double check_tol = subcont::kDefaultPropertyTolerance;
  std::uint64_t check_seed = subcont::kDefaultPropertySeed;
  CLI::App* check =
      app.add_subcommand("check", "Sample a property of a zoo function");
  check->add_option("--function", check_function,
                    JoinNames(subcont::ZooNames()) + " or a TSV path")
      ->required();
  check->add_option("--property", check_property,
                    JoinNames(subcont::PropertyNames()) + "|all")
      ->capture_default_str();
  check->add_option("--trials", check_trials)->capture_default_str();
  check->add_option("--seed", check_seed)->capture_default_str();
  check->add_option("--n", check_n, "Dimension of generated functions")
      ->capture_default_str();
  check->add_option("--tol", check_tol)->capture_default_str();

  // oracle
  std::string oracle_function = "nonmonotone_nqp";
  int oracle_n = 3;
  int oracle_grid = 51;
  std::optional<std::uint64_t> oracle_seed;
  CLI::App* oracle =
      app.add_subcommand("oracle", "Grid brute force over a small instance");
  oracle->add_option("--function", oracle_function)->capture_default_str();
  oracle->add_option("--n", oracle_n)->capture_default_str();
  oracle->add_option("--grid", oracle_grid, "Points per dimension")
      ->capture_default_str();
  oracle->add_option("--seed", oracle_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      cfg.experiment = subcont::ParseExperiment(experiment);
      const std::uint64_t base =
          base_seed ? *base_seed : subcont::BaseSeedFromEnv();
      for (int i = 0; i < num_seeds; ++i) cfg.seeds.push_back(base + i);
      if (!data.empty()) cfg.data_path = data;
      const std::vector<subcont::ResultRecord> records =
          subcont::RunExperiment(cfg);
      std::cout << "wrote " << records.size() << " runs to " << cfg.output_dir
                << "\n";
      return 0;
    }
    if (check->parsed()) {
      const subcont::ZooFunction zoo =
          subcont::MakeZooFunction(check_function, check_n, check_seed);
      const subcont::BoxDomain box =
          std::holds_alternative<subcont::BoxDomain>(zoo.domain)
              ? std::get<subcont::BoxDomain>(zoo.domain)
              : std::get<subcont::PolytopeDomain>(zoo.domain).BoundingBox();
      const std::vector<std::string> properties =
          check_property == "all" ? subcont::PropertyNames()
                                  : std::vector<std::string>{check_property};
      for (const std::string& p : properties) {
        std::cout << subcont::PropertyReportJson(subcont::RunPropertyCheck(
                         zoo.objective, box, p, check_trials, check_tol,
                         check_seed))
                  << "\n";
      }
      return 0;
    }
    if (oracle->parsed()) {
      const std::uint64_t seed =
          oracle_seed ? *oracle_seed : subcont::BaseSeedFromEnv();
      const subcont::ZooFunction zoo =
          subcont::MakeZooFunction(oracle_function, oracle_n, seed);
      const subcont::GridOptimum best =
          subcont::GridBruteForce(zoo.objective, zoo.domain, oracle_grid);
      std::cout.precision(17);
      std::cout << "{\"f_star\": " << best.f_star
                << ", \"x_star\": " << PointText(best.x_star)
                << ", \"evaluated\": " << best.evaluated << "}\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "subcont: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
