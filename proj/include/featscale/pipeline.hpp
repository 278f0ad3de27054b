#pragma once

#include "featscale/dataio.hpp"
#include "featscale/fscale.hpp"

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace featscale {

enum class Task { cluster, classify };

struct ExperimentConfig {
  Task task = Task::cluster;
  Index ell = 1;
  std::vector<double> sigma_grid = {0.01, 0.1, 1.0, 10.0, 100.0};
  Index k_neighbors = 7;
  NegativeValue fiedler_negative = -0.2;
  SplitSpec split{0.5, 0, 10};
  int kmeans_restarts = 20;
  int max_iter = 300;
  std::uint64_t seed = 0;
  /// false runs the same pipeline with s = e (plain spectral clustering).
  bool supervised = true;
  PencilMode pencil_mode = PencilMode::automatic;
  double pencil_tol = numkernel::kDefaultResidualTol;

  void validate() const;
};

/// Apply "key = value" lines (blank lines and '#' comments ignored) on top
/// of `base`. Unknown keys and malformed values throw invalid_argument.
ExperimentConfig apply_config_text(ExperimentConfig base, std::istream& in);

std::string to_string(Task task);
std::string to_string(PencilMode mode);
std::string to_string(const NegativeValue& value);

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// One (sigma, repetition) execution of the supervised pipeline.
struct RunRecord {
  double train_fraction = 0.0;
  std::size_t sigma_index = 0;
  double sigma = 0.0;
  int repetition = 0;
  Index ell = 1;
  Index n_train = 0;
  Index n_test = 0;

  bool ok = false;
  std::string error;  // "<code>: <message>" when !ok

  double ri = kNaN;
  double nmi = kNaN;
  bool nmi_degenerate = false;

  // Scaling diagnostics; `fallback` marks runs that proceeded with s = e.
  bool scaled = false;
  bool fallback = false;
  bool certified = false;
  double mu = kNaN;
  double residual = kNaN;
  double constraint_violation = kNaN;
  double linearization_violation = kNaN;
};

struct SigmaSummary {
  std::size_t sigma_index = 0;
  double sigma = 0.0;
  int runs_ok = 0;
  int runs_failed = 0;
  double ri_mean = kNaN;
  double ri_std = kNaN;
  double nmi_mean = kNaN;
  double nmi_std = kNaN;
  bool best = false;
};

struct EvalReport {
  std::string protocol;  // "split" or "loocv"
  ExperimentConfig config;
  double train_fraction = 0.0;
  Index ell = 1;
  std::vector<RunRecord> runs;
  std::vector<SigmaSummary> summary;
  std::optional<double> selected_sigma;
};

/// Mean and sample standard deviation (0 for a single value).
std::pair<double, double> mean_std(std::span<const double> values);

/// Recompute per-sigma summaries from `runs` and mark the best sigma
/// (highest mean RI, ties to the earlier grid entry).
void summarize(EvalReport& report);

EvalReport run_pipeline(const ExperimentConfig& config, const DataMatrix& data);

std::vector<EvalReport> sweep(const ExperimentConfig& base, const DataMatrix& data,
                              std::span<const double> fractions);

/// Leave-one-out classification: every sample is held out once; one report
/// per requested embedding dimension.
std::vector<EvalReport> run_loocv(const ExperimentConfig& base, const DataMatrix& data,
                                  std::span<const Index> ells);

struct ScalingInspection {
  ScalingVector scaling;
  double sigma = 0.0;
  Index n_train = 0;
  double linearization_violation = 0.0;
};

/// Learn s on repetition 0 of the configured split at the given sigma.
ScalingInspection inspect_scaling(const ExperimentConfig& config, const DataMatrix& data, double sigma);

void write_runs_csv(std::ostream& out, std::span<const EvalReport> reports);
void write_summary_csv(std::ostream& out, std::span<const EvalReport> reports);
void print_report(std::ostream& out, const EvalReport& report);

/// JSON run manifest (configuration, seeds, data shape, library version).
std::string manifest_json(const ExperimentConfig& config, const std::string& command,
                          const DataMatrix& data, std::span<const EvalReport> reports);

std::string version();

}  // namespace featscale
