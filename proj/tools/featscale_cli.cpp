#include "featscale/error.hpp"
#include "featscale/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = featscale;

namespace {

struct DataOptions {
  std::string path;
  fs::Index toy_samples = 0;
  std::uint64_t toy_seed = 0;
  bool no_standardize = false;
};

// Flags left at their defaults do not override values read from --config.
struct ConfigOptions {
  std::string config_file;
  std::string task;
  fs::Index ell = 1;
  std::vector<double> sigma_grid;
  fs::Index k_neighbors = 7;
  std::string fiedler_negative;
  double train_fraction = 0.5;
  int repetitions = 10;
  std::uint64_t seed = 0;
  int restarts = 20;
  int max_iter = 300;
  bool unsupervised = false;
  std::string pencil_mode;
  double pencil_tol = 1e-6;
};

struct OutputOptions {
  std::string prefix;
};

void add_data_options(CLI::App* cmd, DataOptions& d) {
  auto* group = cmd->add_option_group("data");
  group->add_option("--data", d.path, "CSV/TSV matrix; a 'label' column holds classes 1/2");
  group->add_option("--toy", d.toy_samples, "Generate the nested-shell toy set with this many samples");
  group->require_option(1);
  cmd->add_option("--toy-seed", d.toy_seed, "Seed for --toy");
  cmd->add_flag("--no-standardize", d.no_standardize, "Use features as given");
}

void add_config_options(CLI::App* cmd, ConfigOptions& c, bool with_task) {
  cmd->add_option("--config", c.config_file, "key = value file applied before explicit flags");
  if (with_task) cmd->add_option("--task", c.task, "cluster or classify")->check(CLI::IsMember({"cluster", "classify"}));
  cmd->add_option("--ell", c.ell, "Embedding dimension");
  cmd->add_option("--sigma", c.sigma_grid, "Kernel widths to evaluate")->delimiter(',');
  cmd->add_option("-k,--neighbors", c.k_neighbors, "Neighbours kept per sample");
  cmd->add_option("--fiedler-negative", c.fiedler_negative, "Negative Fiedler entry, or 'auto'");
  cmd->add_option("--train-fraction", c.train_fraction, "Labelled fraction per class");
  cmd->add_option("--repetitions", c.repetitions, "Random splits");
  cmd->add_option("--seed", c.seed, "Seed for splits and k-means");
  cmd->add_option("--restarts", c.restarts, "k-means restarts");
  cmd->add_option("--max-iter", c.max_iter, "k-means iteration cap");
  cmd->add_flag("--unsupervised", c.unsupervised, "Skip feature scaling (s = e)");
  cmd->add_option("--pencil-mode", c.pencil_mode, "certified, approximate or automatic")
      ->check(CLI::IsMember({"certified", "approximate", "automatic"}));
  cmd->add_option("--pencil-tol", c.pencil_tol, "Residual tolerance for certification");
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.prefix, "Write <prefix>_runs.csv, <prefix>_summary.csv, <prefix>_manifest.json");
}

bool given(const CLI::App* cmd, const std::string& name) { return cmd->count(name) > 0; }

fs::ExperimentConfig build_config(const CLI::App* cmd, const ConfigOptions& c) {
  fs::ExperimentConfig cfg;
  if (!c.config_file.empty()) {
    std::ifstream in(c.config_file);
    if (!in) fs::fail(fs::ErrorCode::invalid_argument, "cannot open config " + c.config_file);
    cfg = fs::apply_config_text(cfg, in);
  }
  // Re-express explicit flags as config lines so both paths share one parser.
  std::ostringstream lines;
  if (!c.task.empty()) lines << "task = " << c.task << '\n';
  if (given(cmd, "--ell")) lines << "ell = " << c.ell << '\n';
  if (given(cmd, "--sigma")) {
    lines << "sigma_grid = ";
    for (std::size_t i = 0; i < c.sigma_grid.size(); ++i) lines << (i ? "," : "") << fs::format_double(c.sigma_grid[i]);
    lines << '\n';
  }
  if (given(cmd, "--neighbors")) lines << "k_neighbors = " << c.k_neighbors << '\n';
  if (!c.fiedler_negative.empty()) lines << "fiedler_negative = " << c.fiedler_negative << '\n';
  if (given(cmd, "--train-fraction")) lines << "train_fraction = " << fs::format_double(c.train_fraction) << '\n';
  if (given(cmd, "--repetitions")) lines << "repetitions = " << c.repetitions << '\n';
  if (given(cmd, "--seed")) lines << "seed = " << c.seed << '\n';
  if (given(cmd, "--restarts")) lines << "kmeans_restarts = " << c.restarts << '\n';
  if (given(cmd, "--max-iter")) lines << "max_iter = " << c.max_iter << '\n';
  if (c.unsupervised) lines << "supervised = false\n";
  if (!c.pencil_mode.empty()) lines << "pencil_mode = " << c.pencil_mode << '\n';
  if (given(cmd, "--pencil-tol")) lines << "pencil_tol = " << fs::format_double(c.pencil_tol) << '\n';
  std::istringstream in(lines.str());
  return fs::apply_config_text(cfg, in);
}

fs::DataMatrix load_data(const DataOptions& d) {
  fs::DataMatrix data = d.path.empty() ? fs::generate_toy(d.toy_samples, d.toy_seed) : fs::load_matrix(d.path);
  return d.no_standardize ? data : fs::standardize(data);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fs::fail(fs::ErrorCode::invalid_argument, "cannot write " + path);
  out << content;
}

void emit(const OutputOptions& o, const fs::ExperimentConfig& cfg, const std::string& command,
          const fs::DataMatrix& data, const std::vector<fs::EvalReport>& reports) {
  for (const auto& r : reports) {
    fs::print_report(std::cout, r);
    std::cout << '\n';
  }
  if (o.prefix.empty()) return;
  std::ostringstream runs;
  std::ostringstream summary;
  fs::write_runs_csv(runs, reports);
  fs::write_summary_csv(summary, reports);
  write_file(o.prefix + "_runs.csv", runs.str());
  write_file(o.prefix + "_summary.csv", summary.str());
  write_file(o.prefix + "_manifest.json", fs::manifest_json(cfg, command, data, reports));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervised feature scaling for spectral clustering and classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", fs::version());

  // generate
  auto* gen = app.add_subcommand("generate", "Write the nested-shell toy data set");
  fs::Index gen_samples = 200;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("-n,--samples", gen_samples, "Number of samples (even, >= 8)");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("-o,--out", gen_out, "Output CSV (stdout when omitted)");

  // cluster / classify
  DataOptions cl_data, cf_data, sw_data, lo_data, in_data;
  ConfigOptions cl_cfg, cf_cfg, sw_cfg, lo_cfg, in_cfg;
  OutputOptions cl_out, cf_out, sw_out, lo_out;

  auto* cl = app.add_subcommand("cluster", "Scaled spectral clustering over a sigma grid");
  add_data_options(cl, cl_data);
  add_config_options(cl, cl_cfg, false);
  add_output_options(cl, cl_out);

  auto* cf = app.add_subcommand("classify", "Scaled spectral embedding + 1-NN over a sigma grid");
  add_data_options(cf, cf_data);
  add_config_options(cf, cf_cfg, false);
  add_output_options(cf, cf_out);

  auto* sw = app.add_subcommand("sweep", "Repeat an experiment across training fractions");
  std::vector<double> fractions = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  add_data_options(sw, sw_data);
  add_config_options(sw, sw_cfg, true);
  add_output_options(sw, sw_out);
  sw->add_option("--fractions", fractions, "Training fractions")->delimiter(',');

  auto* lo = app.add_subcommand("loocv", "Leave-one-out 1-NN classification");
  std::vector<fs::Index> ells = {1, 2, 3};
  add_data_options(lo, lo_data);
  add_config_options(lo, lo_cfg, false);
  add_output_options(lo, lo_out);
  lo->add_option("--ells", ells, "Embedding dimensions to score")->delimiter(',');

  auto* in = app.add_subcommand("inspect-scaling", "Print the learned factor per feature");
  double in_sigma = 1.0;
  add_data_options(in, in_data);
  add_config_options(in, in_cfg, false);
  in->add_option("--at", in_sigma, "Kernel width used for the pencil");

  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    if (gen->parsed()) {
      const fs::DataMatrix data = fs::generate_toy(gen_samples, gen_seed);
      if (gen_out.empty()) {
        fs::write_matrix(std::cout, data);
      } else {
        fs::save_matrix(gen_out, data);
      }
    } else if (cl->parsed() || cf->parsed()) {
      const bool is_cluster = cl->parsed();
      auto* cmd = is_cluster ? cl : cf;
      fs::ExperimentConfig cfg = build_config(cmd, is_cluster ? cl_cfg : cf_cfg);
      cfg.task = is_cluster ? fs::Task::cluster : fs::Task::classify;
      const fs::DataMatrix data = load_data(is_cluster ? cl_data : cf_data);
      emit(is_cluster ? cl_out : cf_out, cfg, command, data, {fs::run_pipeline(cfg, data)});
    } else if (sw->parsed()) {
      const fs::ExperimentConfig cfg = build_config(sw, sw_cfg);
      const fs::DataMatrix data = load_data(sw_data);
      emit(sw_out, cfg, command, data, fs::sweep(cfg, data, fractions));
    } else if (lo->parsed()) {
      fs::ExperimentConfig cfg = build_config(lo, lo_cfg);
      cfg.task = fs::Task::classify;
      const fs::DataMatrix data = load_data(lo_data);
      emit(lo_out, cfg, command, data, fs::run_loocv(cfg, data, ells));
    } else if (in->parsed()) {
      const fs::ExperimentConfig cfg = build_config(in, in_cfg);
      const fs::DataMatrix data = load_data(in_data);
      const fs::ScalingInspection res = fs::inspect_scaling(cfg, data, in_sigma);
      fs::write_scaling_table(std::cout, data.feature_names, res.scaling.s);
      std::cerr << "mu=" << fs::format_double(res.scaling.mu) << " residual=" << fs::format_double(res.scaling.residual)
                << " certified=" << (res.scaling.certified ? "yes" : "no")
                << " linearization_violation=" << fs::format_double(res.linearization_violation) << '\n';
    }
  } catch (const fs::Error& e) {
    std::cerr << "featscale: error [" << fs::to_string(e.code()) << "] " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "featscale: error [internal] " << e.what() << '\n';
    return 3;
  }
  return 0;
}
