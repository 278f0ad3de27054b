#include "featscale/error.hpp"
#include "featscale/pipeline.hpp"

#include <doctest.h>

#include <sstream>

using namespace featscale;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.sigma_grid = {1.0, 10.0};
  cfg.split.repetitions = 2;
  cfg.kmeans_restarts = 5;
  return cfg;
}

// Two well separated groups joined by weak kNN edges (a connected graph, so
// the separating vector is not deflated with the trivial one).
DataMatrix two_groups() {
  DataMatrix d;
  d.values.resize(20, 2);
  std::vector<int> labels;
  for (Index i = 0; i < 20; ++i) {
    const bool first = i < 10;
    d.values(i, 0) = (first ? 0.0 : 3.0) + 0.1 * static_cast<double>(i % 5);
    d.values(i, 1) = 0.05 * static_cast<double>(i % 3);
    labels.push_back(first ? 1 : 2);
  }
  d.feature_names = {"a", "b"};
  d.labels = labels;
  return d;
}

}  // namespace

TEST_CASE("config: key = value overrides and validation") {
  std::istringstream in(
      "# comment\n"
      "task = classify\n"
      "ell = 3\n"
      "sigma_grid = 0.5, 2\n"
      "fiedler_negative = auto\n"
      "train_fraction = 0.25\n"
      "seed = 9\n"
      "supervised = false\n"
      "pencil_mode = certified\n");
  const ExperimentConfig cfg = apply_config_text({}, in);
  CHECK(cfg.task == Task::classify);
  CHECK(cfg.ell == 3);
  CHECK(cfg.sigma_grid == std::vector<double>{0.5, 2.0});
  CHECK(std::holds_alternative<AutoNegative>(cfg.fiedler_negative));
  CHECK(cfg.split.train_fraction == 0.25);
  CHECK(cfg.seed == 9);
  CHECK(cfg.split.seed == 9);
  CHECK_FALSE(cfg.supervised);
  CHECK(cfg.pencil_mode == PencilMode::certified);

  for (const char* bad : {"colour = red\n", "ell = 0\n", "sigma_grid = 1,-1\n", "task = regress\n", "ell\n",
                          "fiedler_negative = 0.3\n", "train_fraction = 1.5\n"}) {
    std::istringstream b(bad);
    CHECK_THROWS_AS(apply_config_text({}, b), Error);
  }
}

TEST_CASE("mean_std and summaries are recomputable") {
  const std::vector<double> v{1.0, 2.0, 4.0};
  const auto [m, s] = mean_std(v);
  CHECK(m == doctest::Approx(7.0 / 3.0));
  CHECK(s == doctest::Approx(std::sqrt((16.0 / 9 + 1.0 / 9 + 25.0 / 9) / 2.0)));
  const std::vector<double> one{3.0};
  CHECK(mean_std(one).second == 0.0);

  const EvalReport r = run_pipeline(small_config(), standardize(generate_toy(60, 1)));
  CHECK(r.runs.size() == 4);
  for (const auto& s : r.summary) {
    std::vector<double> ri;
    for (const auto& run : r.runs)
      if (run.ok && run.sigma_index == s.sigma_index) ri.push_back(run.ri);
    const auto [mm, ss] = mean_std(ri);
    CHECK(std::abs(mm - s.ri_mean) < 1e-12);
    CHECK(std::abs(ss - s.ri_std) < 1e-12);
  }
  REQUIRE(r.selected_sigma);
  int best = 0;
  for (const auto& s : r.summary) best += s.best ? 1 : 0;
  CHECK(best == 1);
}

TEST_CASE("run_pipeline: separated groups are recovered without scaling") {
  // Two features and ten training rows give a tall pencil far outside the
  // linearized regime, so only the trivial embedding (s = e) is checked here.
  ExperimentConfig cfg = small_config();
  cfg.k_neighbors = 12;
  cfg.supervised = false;
  const EvalReport c = run_pipeline(cfg, two_groups());
  REQUIRE(c.selected_sigma);
  for (const auto& s : c.summary)
    if (s.best) {
      CHECK(s.ri_mean == 1.0);
      CHECK(s.nmi_mean == doctest::Approx(1.0));
    }
  cfg.task = Task::classify;
  const EvalReport k = run_pipeline(cfg, two_groups());
  REQUIRE(k.selected_sigma);
  for (const auto& run : k.runs) CHECK(run.n_test == 10);
}

TEST_CASE("run_pipeline: deterministic and failures are recorded") {
  ExperimentConfig cfg = small_config();
  cfg.sigma_grid = {1.0};
  cfg.split.train_fraction = 1.0;
  const DataMatrix data = standardize(generate_toy(40, 3));
  std::ostringstream a, b;
  const EvalReport r1 = run_pipeline(cfg, data);
  const EvalReport r2 = run_pipeline(cfg, data);
  write_runs_csv(a, std::span(&r1, 1));
  write_runs_csv(b, std::span(&r2, 1));
  CHECK(a.str() == b.str());

  // Classification with a full training split has no test rows: recorded, not thrown.
  cfg.task = Task::classify;
  const EvalReport r3 = run_pipeline(cfg, data);
  for (const auto& run : r3.runs) {
    CHECK_FALSE(run.ok);
    CHECK(run.error.find("empty_training") == 0);
  }
  CHECK_FALSE(r3.selected_sigma);

  DataMatrix unlabeled = data;
  unlabeled.labels.reset();
  CHECK_THROWS_AS(run_pipeline(cfg, unlabeled), Error);
}

TEST_CASE("sweep: one report per fraction, empty list allowed") {
  ExperimentConfig cfg = small_config();
  cfg.sigma_grid = {1.0};
  cfg.split.repetitions = 1;
  const DataMatrix data = standardize(generate_toy(40, 2));
  const std::vector<double> fractions{0.2, 0.5, 0.8};
  const auto reports = sweep(cfg, data, fractions);
  REQUIRE(reports.size() == 3);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i].runs[0].n_train >= reports[i - 1].runs[0].n_train);
  CHECK(sweep(cfg, data, {}).empty());
}

TEST_CASE("run_loocv: every sample held out once per sigma") {
  ExperimentConfig cfg = small_config();
  cfg.sigma_grid = {1.0};
  const DataMatrix data = standardize(generate_toy(24, 5));
  const std::vector<Index> ells{1, 2};
  const auto reports = run_loocv(cfg, data, ells);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.protocol == "loocv");
    CHECK(r.runs.size() == 24);
    for (const auto& run : r.runs) {
      CHECK(run.n_test == 1);
      CHECK(run.n_train == 23);
    }
  }
  CHECK(reports[1].ell == 2);
}

TEST_CASE("outputs: CSV headers and manifest keys") {
  ExperimentConfig cfg = small_config();
  cfg.sigma_grid = {1.0};
  cfg.split.repetitions = 1;
  const DataMatrix data = standardize(generate_toy(24, 5));
  const EvalReport r = run_pipeline(cfg, data);
  std::ostringstream runs, summary, table;
  write_runs_csv(runs, std::span(&r, 1));
  write_summary_csv(summary, std::span(&r, 1));
  print_report(table, r);
  CHECK(runs.str().rfind("protocol,task,train_fraction", 0) == 0);
  CHECK(summary.str().rfind("protocol,task,train_fraction,ell,sigma,runs_ok", 0) == 0);
  CHECK(table.str().find("sigma") != std::string::npos);
  const std::string json = manifest_json(cfg, "cluster --toy 24", data, std::span(&r, 1));
  for (const char* key : {"\"config\"", "\"results\"", "\"seed\"", "\"version\"", "\"sigma_grid\""})
    CHECK(json.find(key) != std::string::npos);
}

TEST_CASE("inspect_scaling: noise features get small factors on the toy set") {
  ExperimentConfig cfg;
  const DataMatrix data = standardize(generate_toy(200, 0));
  const ScalingInspection ins = inspect_scaling(cfg, data, 1.0);
  REQUIRE(ins.scaling.s.size() == 10);
  const double informative = ins.scaling.s.head(3).cwiseAbs().mean();
  const double noise = ins.scaling.s.tail(7).cwiseAbs().mean();
  CHECK(noise < 0.2 * informative);
  CHECK(ins.n_train == 100);
}
