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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace subcont {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

Point P(std::initializer_list<double> v) {
  Point p(static_cast<int>(v.size()));
  int i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

std::string DataPath(const std::string& name) {
  return std::string(SUBCONT_TEST_DATA_DIR) + "/" + name;
}

std::string ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("subcont_") + info->test_suite_name() + "_" +
             info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  std::string Write(const std::string& name, const std::string& text) const {
    std::ofstream(path_ / name, std::ios::binary) << text;
    return (path_ / name).string();
  }

 private:
  fs::path path_;
};

// ---------------------------------------------------------------------------
// Edge lists.

TEST(LoadBipartiteTsvTest, TwoEdgeInfluenceFile) {
  TempDir tmp;
  const std::string path =
      tmp.Write("g.tsv", "# kind=influence\nc1\tu1\t0.5\nc2\tu1\t0.25\n");
  const LoadedGraph g = LoadBipartiteTsv(path);
  const auto& inst = std::get<BipartiteInfluenceInstance>(g.instance);
  EXPECT_EQ(inst.num_channels(), 2);
  EXPECT_EQ(inst.num_customers(), 1);
  EXPECT_EQ(g.source_ids, (std::vector<std::string>{"c1", "c2"}));
  EXPECT_EQ(g.target_ids, (std::vector<std::string>{"u1"}));
  // 1 - (1 - 0.5)(1 - 0.25) at x = 1.
  EXPECT_DOUBLE_EQ(inst.Value(P({1, 1})), 0.625);
}

TEST(LoadBipartiteTsvTest, BundledFiles) {
  const LoadedGraph inf = LoadBipartiteTsv(DataPath("influence_small.tsv"));
  const auto& i = std::get<BipartiteInfluenceInstance>(inf.instance);
  EXPECT_EQ(i.num_channels(), 3);
  EXPECT_EQ(i.num_customers(), 3);
  EXPECT_EQ(i.edges().size(), 5u);

  const LoadedGraph rev = LoadBipartiteTsv(DataPath("revenue_small.tsv"));
  const auto& r = std::get<RevenueInstance>(rev.instance);
  EXPECT_EQ(r.num_nodes(), 3);
  EXPECT_EQ(r.self_activation(), P({0.9, 0.8, 0.7}));
  EXPECT_EQ(r.gamma(), 0.5);
  EXPECT_TRUE(rev.target_ids.empty());
}

TEST(LoadBipartiteTsvTest, ErrorsCarryLineNumbers) {
  TempDir tmp;
  struct Case {
    std::string text;
    int line;
    std::string fragment;
  };
  const std::vector<Case> cases = {
      {"# kind=influence\n", 0, "no edges"},
      {"# kind=influence\na\tb\t0.5\n\na\tb\t0.1\n", 4, "duplicate edge a -> b"},
      {"# kind=influence\na\tb\t1.5\n", 2, "edge a -> b"},
      {"# kind=influence\na b 0.5\n", 2, "line 2"},
      {"a\tb\t0.5\n", 1, "kind="},
      {"# kind=graph\n", 1, "unknown kind"},
      {"# kind=revenue\na\tb\t-1\n", 2, "negative"},
      {"# kind=revenue\na\tb\t1\nb\ta\t2\n", 3, "duplicate edge b -> a"},
  };
  for (const Case& c : cases) {
    const std::string path = tmp.Write("bad.tsv", c.text);
    try {
      LoadBipartiteTsv(path);
      ADD_FAILURE() << "expected TsvError for: " << c.text;
    } catch (const TsvError& e) {
      EXPECT_EQ(e.line(), c.line) << e.what();
      EXPECT_NE(std::string(e.what()).find(c.fragment), std::string::npos)
          << e.what();
    }
  }
  EXPECT_THROW(LoadBipartiteTsv((tmp.path() / "missing.tsv").string()),
               TsvError);
}

// ---------------------------------------------------------------------------
// Grid oracle.

TEST(GridBruteForceTest, Examples) {
  ObjectiveFlags flags;
  const Objective bowl(
      "bowl", 2,
      [](const Point& x) { return -(x.array() - 0.5).square().sum(); }, flags);
  const GridOptimum a = GridBruteForce(bowl, BoxDomain::Unit(2), 3);
  EXPECT_EQ(a.x_star, P({0.5, 0.5}));
  EXPECT_EQ(a.f_star, 0.0);
  EXPECT_EQ(a.evaluated, 9);

  const Objective first("first", 2, [](const Point& x) { return x[0]; }, flags);
  EXPECT_EQ(GridBruteForce(first, BoxDomain::Unit(2), 5).f_star, 1.0);

  const Objective sum("sum", 3, [](const Point& x) { return x.sum(); }, flags);
  const PolytopeDomain simplex =
      PolytopeDomain::Make(Matrix::Ones(1, 3), P({1.0}), Point::Ones(3));
  const GridOptimum c = GridBruteForce(sum, simplex, 11);
  EXPECT_NEAR(c.f_star, 1.0, 1e-12);
  // Grid points with i + j + k <= 10.
  EXPECT_EQ(c.evaluated, 286);
}

TEST(GridBruteForceTest, Guards) {
  ObjectiveFlags flags;
  const Objective f7("f7", 7, [](const Point& x) { return x.sum(); }, flags);
  EXPECT_THROW(GridBruteForce(f7, BoxDomain::Unit(7), 3), InvalidArgument);
  const Objective f6("f6", 6, [](const Point& x) { return x.sum(); }, flags);
  EXPECT_THROW(GridBruteForce(f6, BoxDomain::Unit(6), 30), InvalidArgument);
  EXPECT_THROW(GridBruteForce(f6, BoxDomain::Unit(6), 0), InvalidArgument);
  EXPECT_EQ(GridBruteForce(f6, BoxDomain::Unit(6), 1).evaluated, 1);
}

// ---------------------------------------------------------------------------
// Zoo registry and property checks.

TEST(ZooTest, EveryNameBuilds) {
  for (const std::string& name : ZooNames()) {
    const ZooFunction z = MakeZooFunction(name, 4, 1);
    const BoxDomain box =
        std::holds_alternative<BoxDomain>(z.domain)
            ? std::get<BoxDomain>(z.domain)
            : std::get<PolytopeDomain>(z.domain).BoundingBox();
    EXPECT_TRUE(std::isfinite(z.objective.Value(box.lower))) << name;
  }
  EXPECT_THROW(MakeZooFunction("/no/such/file.tsv", 4, 1), InvalidArgument);
  const ZooFunction file = MakeZooFunction(DataPath("influence_small.tsv"), 4, 1);
  EXPECT_EQ(file.objective.dimension(), 3);
}

TEST(PropertyCheckTest, ProductIsCoordinateConcaveOnly) {
  const ZooFunction z = MakeZooFunction("product", 2, 0);
  const BoxDomain box = std::get<BoxDomain>(z.domain);
  const PropertyReport weak =
      RunPropertyCheck(z.objective, box, "weak-dr", 500, 1e-9, 0);
  EXPECT_FALSE(weak.passed());
  EXPECT_FALSE(weak.witness.empty());
  // Linear in each coordinate, but the positive cross term breaks
  // submodularity.
  EXPECT_TRUE(
      RunPropertyCheck(z.objective, box, "coordconcave", 500, 1e-9, 0).passed());
  EXPECT_FALSE(
      RunPropertyCheck(z.objective, box, "submodular", 500, 1e-9, 0).passed());
  EXPECT_THROW(RunPropertyCheck(z.objective, box, "convex", 10, 1e-9, 0),
               InvalidArgument);
  const json parsed = json::parse(PropertyReportJson(weak));
  EXPECT_EQ(parsed["verdict"], "fail");
  EXPECT_FALSE(parsed["witness"].is_null());
}

// ---------------------------------------------------------------------------
// Trace CSVs.

TEST(TraceCsvTest, RoundTripsExactly) {
  TempDir tmp;
  SolverTrace trace;
  trace.Append({0, 0.0, 0.1, 0.0});
  trace.Append({1, 1.0 / 3.0, 1.0 / 7.0, 1e-17});
  trace.Append({2, 1.0, 2.0 / 3.0, 0.0});
  const std::string path = (tmp.path() / "t.csv").string();
  WriteTraceCsv(path, trace);
  const SolverTrace back = ReadTraceCsv(path);
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(back.records()[k].t, trace.records()[k].t);
    EXPECT_EQ(back.records()[k].objective, trace.records()[k].objective);
  }
  EXPECT_EQ(ReadAll(path).substr(0, 42),
            "iteration,t,objective,feasibility_residual");
  tmp.Write("bad.csv", "iter,t\n0,0\n");
  EXPECT_THROW(ReadTraceCsv((tmp.path() / "bad.csv").string()),
               InvalidArgument);
}

// ---------------------------------------------------------------------------
// Experiments.

ExperimentConfig SmallMonotone(const fs::path& out) {
  ExperimentConfig c;
  c.experiment = ExperimentKind::kMonotoneNqp;
  c.n = 6;
  c.m = 3;
  c.seeds = {11, 12};
  c.iterations = 10;
  c.k_s = 20;
  c.sweep = {1.0, 2.0};
  c.output_dir = out.string();
  return c;
}

TEST(RunExperimentTest, WritesLayoutAndSummaryMatchesTraces) {
  TempDir tmp;
  const ExperimentConfig c = SmallMonotone(tmp.path() / "run");
  const std::vector<ResultRecord> records = RunExperiment(c);
  const std::size_t methods = DefaultMethods(c.experiment, c.steps).size();
  EXPECT_EQ(records.size(), 2 * 2 * methods);

  const json manifest = json::parse(ReadAll(tmp.path() / "run/manifest.json"));
  EXPECT_EQ(manifest["status"], "ok");
  EXPECT_EQ(manifest["completed_runs"], records.size());
  EXPECT_EQ(manifest["trace_header"],
            "iteration,t,objective,feasibility_residual");

  const json summary = json::parse(ReadAll(tmp.path() / "run/summary.json"));
  ASSERT_EQ(summary["points"].size(), 2u);
  for (const json& point : summary["points"]) {
    for (const auto& [method, stats] : point["methods"].items()) {
      ASSERT_EQ(stats["final_values"].size(), 2u);
      for (std::size_t k = 0; k < 2; ++k) {
        const std::string rel = stats["trace_paths"][k];
        const SolverTrace trace =
            ReadTraceCsv((tmp.path() / "run" / rel).string());
        EXPECT_EQ(trace.back().objective,
                  stats["final_values"][k].get<double>())
            << rel;
      }
    }
  }
  for (const ResultRecord& r : records) {
    if (r.method == "frank_wolfe") EXPECT_NEAR(r.step_sum, 1.0, 1e-12);
  }
}

TEST(RunExperimentTest, RerunIsByteIdentical) {
  TempDir tmp;
  RunExperiment(SmallMonotone(tmp.path() / "a"));
  RunExperiment(SmallMonotone(tmp.path() / "b"));
  for (const auto& entry :
       fs::recursive_directory_iterator(tmp.path() / "a")) {
    if (!entry.is_regular_file()) continue;
    const fs::path rel = fs::relative(entry.path(), tmp.path() / "a");
    if (rel == "manifest.json") {
      json ma = json::parse(ReadAll(entry.path()));
      json mb = json::parse(ReadAll(tmp.path() / "b" / rel));
      EXPECT_EQ(ma, mb);
      continue;
    }
    EXPECT_EQ(ReadAll(entry.path()), ReadAll(tmp.path() / "b" / rel))
        << rel;
  }
}

TEST(RunExperimentTest, OtherExperimentsRun) {
  TempDir tmp;
  ExperimentConfig nm;
  nm.experiment = ExperimentKind::kNonmonotoneNqp;
  nm.n = 3;
  nm.seeds = {1};
  nm.k_s = 10;
  nm.sweep = {1.0};
  nm.grid_points = 11;
  nm.output_dir = (tmp.path() / "nm").string();
  for (const ResultRecord& r : RunExperiment(nm)) {
    ASSERT_TRUE(r.f_star_grid.has_value());
    if (r.method == "double_greedy") {
      EXPECT_GE(r.final_value, *r.f_star_grid / 3.0 - 1e-9);
    }
  }

  ExperimentConfig budget;
  budget.experiment = ExperimentKind::kBudgetAllocation;
  budget.seeds = {1};
  budget.k_s = 10;
  budget.iterations = 10;
  budget.data_path = DataPath("influence_small.tsv");
  budget.sweep = {1.0};
  budget.output_dir = (tmp.path() / "budget").string();
  EXPECT_FALSE(RunExperiment(budget).empty());

  ExperimentConfig rev;
  rev.experiment = ExperimentKind::kRevenue;
  rev.seeds = {1};
  rev.k_s = 10;
  rev.data_path = DataPath("revenue_small.tsv");
  rev.sweep = {1.0};
  rev.output_dir = (tmp.path() / "rev").string();
  for (const ResultRecord& r : RunExperiment(rev)) {
    EXPECT_GE(r.final_value, 0.0) << r.method;
  }
}

TEST(RunExperimentTest, PropertyCheckFindsProductWitness) {
  TempDir tmp;
  ExperimentConfig c;
  c.experiment = ExperimentKind::kPropertyCheck;
  c.function = "product";
  c.properties = {"weak-dr"};
  c.seeds = {3};
  c.output_dir = (tmp.path() / "pc").string();
  RunExperiment(c);
  const json summary = json::parse(ReadAll(tmp.path() / "pc/summary.json"));
  ASSERT_EQ(summary["reports"].size(), 1u);
  EXPECT_EQ(summary["reports"][0]["property"], "weak-dr");
  EXPECT_EQ(summary["reports"][0]["verdict"], "fail");
  EXPECT_FALSE(summary["reports"][0]["witness"].is_null());
}

TEST(RunExperimentTest, FailureMarksManifest) {
  TempDir tmp;
  ExperimentConfig c;
  c.experiment = ExperimentKind::kBudgetAllocation;
  c.seeds = {1};
  c.data_path = DataPath("revenue_small.tsv");
  c.output_dir = (tmp.path() / "bad").string();
  EXPECT_THROW(RunExperiment(c), InvalidArgument);
  const json manifest = json::parse(ReadAll(tmp.path() / "bad/manifest.json"));
  EXPECT_EQ(manifest["status"], "failed");
  EXPECT_NE(manifest["error"].get<std::string>().find("kind=influence"),
            std::string::npos);
}

TEST(RunExperimentTest, ValidateRejectsBadConfigs) {
  ExperimentConfig c;
  c.output_dir = "unused";
  EXPECT_THROW(c.Validate(), InvalidArgument);  // no seeds
  c.seeds = {1};
  EXPECT_NO_THROW(c.Validate());
  c.iterations = 0;
  EXPECT_THROW(c.Validate(), InvalidArgument);
}

TEST(BaseSeedTest, EnvironmentOverride) {
  ::unsetenv("SUBCONT_SEED");
  EXPECT_EQ(BaseSeedFromEnv(), kDefaultBaseSeed);
  ::setenv("SUBCONT_SEED", "42", 1);
  EXPECT_EQ(BaseSeedFromEnv(), 42u);
  ::setenv("SUBCONT_SEED", "junk", 1);
  EXPECT_THROW(BaseSeedFromEnv(), InvalidArgument);
  ::unsetenv("SUBCONT_SEED");
}

TEST(ExperimentNamesTest, RoundTrip) {
  for (ExperimentKind k :
       {ExperimentKind::kMonotoneNqp, ExperimentKind::kNonmonotoneNqp,
        ExperimentKind::kBudgetAllocation, ExperimentKind::kRevenue,
        ExperimentKind::kPropertyCheck}) {
    EXPECT_EQ(ParseExperiment(ExperimentName(k)), k);
  }
  EXPECT_THROW(ParseExperiment("sudoku"), InvalidArgument);
}

}  // namespace
}  // namespace subcont
