#include "featscale/pipeline.hpp"

#include "featscale/downstream.hpp"
#include "featscale/error.hpp"
#include "featscale/metrics.hpp"
#include "featscale/simgraph.hpp"
#include "featscale/specembed.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#ifndef FEATSCALE_VERSION
#define FEATSCALE_VERSION "0.0.0"
#endif

namespace featscale {
namespace {

// Cache entries beyond this are dropped wholesale; LOOCV only revisits the
// unscaled embedding and identical fallback vectors.
constexpr std::size_t kEmbeddingCacheLimit = 64;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix(splitmix(splitmix(seed) ^ a) ^ b);
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  fail(ErrorCode::invalid_argument, "config: invalid value '" + value + "' for " + key);
}

double parse_double(const std::string& key, const std::string& value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
    bad_value(key, value);
  }
  return out;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& value) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) bad_value(key, value);
  return out;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  bad_value(key, value);
}

std::string error_text(const Error& e) { return std::string(to_string(e.code())) + ": " + e.what(); }

struct ScalingOutcome {
  Eigen::VectorXd s;
  RunRecord diagnostics;  // only the scaling fields are filled
};

// Learn s on the training rows, falling back to s = e when the pencil
// yields nothing usable.
ScalingOutcome scaling_for(const ExperimentConfig& cfg, const DataMatrix& train, double sigma) {
  ScalingOutcome out;
  const Index m = train.features();
  if (!cfg.supervised) {
    out.s = Eigen::VectorXd::Ones(m);
    return out;
  }
  std::optional<Eigen::VectorXd> degrees;
  if (std::holds_alternative<AutoNegative>(cfg.fiedler_negative)) {
    KernelParams kp{sigma, std::min<Index>(cfg.k_neighbors, train.samples() - 1), std::nullopt};
    degrees = build_similarity(train.values, kp).degrees;
  }
  const FiedlerEstimate fiedler = estimate_fiedler(*train.labels, cfg.fiedler_negative, degrees);
  const PencilSystem system = assemble_pencil(train.values, fiedler, sigma);
  try {
    const ScalingVector sv = learn_scaling(system, {cfg.pencil_tol, cfg.pencil_mode});
    out.s = sv.s;
    out.diagnostics.scaled = true;
    out.diagnostics.certified = sv.certified;
    out.diagnostics.mu = sv.mu;
    out.diagnostics.residual = sv.residual;
    out.diagnostics.constraint_violation = sv.constraint_violation;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::no_scaling && e.code() != ErrorCode::non_normalizable) throw;
    out.s = Eigen::VectorXd::Ones(m);
    out.diagnostics.fallback = true;
  }
  out.diagnostics.linearization_violation = linearization_violation(train.values, out.s, sigma);
  return out;
}

Embedding embed_scaled(const ExperimentConfig& cfg, const DataMatrix& data, const Eigen::VectorXd& s,
                       double sigma, Index ell) {
  const ScaledData scaled = apply_scaling(data.values, s);
  KernelParams kp{sigma, cfg.k_neighbors, std::nullopt};
  if (scaled.has_negative()) kp.scaling = scaled.signs;
  return embed(build_similarity(scaled.Z, kp), ell);
}

void copy_scaling(RunRecord& rec, const RunRecord& diag) {
  rec.scaled = diag.scaled;
  rec.fallback = diag.fallback;
  rec.certified = diag.certified;
  rec.mu = diag.mu;
  rec.residual = diag.residual;
  rec.constraint_violation = diag.constraint_violation;
  rec.linearization_violation = diag.linearization_violation;
}

// Score one embedding against the current split.
void score(const ExperimentConfig& cfg, const DataMatrix& data, const Split& sp, const Eigen::MatrixXd& U,
           std::uint64_t kmeans_seed, RunRecord& rec) {
  const auto& labels = *data.labels;
  if (cfg.task == Task::cluster) {
    const ClusterAssignment ca = kmeans(U, 2, cfg.kmeans_restarts, kmeans_seed, cfg.max_iter);
    std::vector<int> predicted(ca.labels.size());
    std::transform(ca.labels.begin(), ca.labels.end(), predicted.begin(), [](int l) { return l + 1; });
    rec.ri = rand_index(labels, predicted, true);
    const NmiResult nr = nmi(labels, predicted);
    rec.nmi = nr.value;
    rec.nmi_degenerate = nr.degenerate;
  } else {
    if (sp.test.empty()) fail(ErrorCode::empty_training, "classify: split leaves no test samples");
    std::vector<int> train_labels;
    train_labels.reserve(sp.train.size());
    for (Index i : sp.train) train_labels.push_back(labels[static_cast<std::size_t>(i)]);
    const std::vector<int> predicted = nn1_classify(U, sp.train, train_labels, sp.test);
    std::vector<int> truth;
    truth.reserve(sp.test.size());
    for (Index i : sp.test) truth.push_back(labels[static_cast<std::size_t>(i)]);
    rec.ri = rand_index(truth, predicted, false);
  }
  rec.ok = true;
}

RunRecord base_record(const ExperimentConfig& cfg, const Split& sp, double fraction, std::size_t si,
                      int rep, Index ell) {
  RunRecord rec;
  rec.train_fraction = fraction;
  rec.sigma_index = si;
  rec.sigma = cfg.sigma_grid[si];
  rec.repetition = rep;
  rec.ell = ell;
  rec.n_train = static_cast<Index>(sp.train.size());
  rec.n_test = static_cast<Index>(sp.test.size());
  return rec;
}

void require_labels(const DataMatrix& data) {
  if (!data.labels) fail(ErrorCode::invalid_argument, "pipeline: data has no labels");
  if (static_cast<Index>(data.labels->size()) != data.samples()) {
    fail(ErrorCode::shape_mismatch, "pipeline: label count differs from samples");
  }
}

std::string csv_double(double x) { return std::isfinite(x) ? format_double(x) : std::string(); }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json json_double(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }

}  // namespace

void ExperimentConfig::validate() const {
  if (ell < 1) fail(ErrorCode::invalid_argument, "config: ell must be >= 1");
  if (sigma_grid.empty()) fail(ErrorCode::invalid_argument, "config: sigma grid is empty");
  for (double s : sigma_grid) {
    if (!(s > 0.0) || !std::isfinite(s)) fail(ErrorCode::invalid_argument, "config: sigma values must be positive");
  }
  if (k_neighbors < 1) fail(ErrorCode::invalid_argument, "config: k_neighbors must be >= 1");
  if (!(split.train_fraction > 0.0 && split.train_fraction <= 1.0)) {
    fail(ErrorCode::invalid_argument, "config: train_fraction must lie in (0, 1]");
  }
  if (split.repetitions < 1) fail(ErrorCode::invalid_argument, "config: repetitions must be >= 1");
  if (kmeans_restarts < 1) fail(ErrorCode::invalid_argument, "config: kmeans_restarts must be >= 1");
  if (max_iter < 1) fail(ErrorCode::invalid_argument, "config: max_iter must be >= 1");
  if (!(pencil_tol > 0.0)) fail(ErrorCode::invalid_argument, "config: pencil_tol must be positive");
  if (const double* neg = std::get_if<double>(&fiedler_negative); neg && !(*neg < 0.0)) {
    fail(ErrorCode::invalid_argument, "config: fiedler_negative must be negative");
  }
}

ExperimentConfig apply_config_text(ExperimentConfig cfg, std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorCode::invalid_argument, "config: expected key = value in '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "task") {
      if (value == "cluster") cfg.task = Task::cluster;
      else if (value == "classify") cfg.task = Task::classify;
      else bad_value(key, value);
    } else if (key == "ell") {
      cfg.ell = parse_int<Index>(key, value);
    } else if (key == "sigma_grid") {
      cfg.sigma_grid.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) cfg.sigma_grid.push_back(parse_double(key, trim(item)));
    } else if (key == "k_neighbors") {
      cfg.k_neighbors = parse_int<Index>(key, value);
    } else if (key == "fiedler_negative") {
      if (value == "auto") cfg.fiedler_negative = AutoNegative{};
      else cfg.fiedler_negative = parse_double(key, value);
    } else if (key == "train_fraction") {
      cfg.split.train_fraction = parse_double(key, value);
    } else if (key == "repetitions") {
      cfg.split.repetitions = parse_int<int>(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_int<std::uint64_t>(key, value);
      cfg.split.seed = cfg.seed;
    } else if (key == "kmeans_restarts") {
      cfg.kmeans_restarts = parse_int<int>(key, value);
    } else if (key == "max_iter") {
      cfg.max_iter = parse_int<int>(key, value);
    } else if (key == "supervised") {
      cfg.supervised = parse_bool(key, value);
    } else if (key == "pencil_mode") {
      if (value == "certified") cfg.pencil_mode = PencilMode::certified;
      else if (value == "approximate") cfg.pencil_mode = PencilMode::approximate;
      else if (value == "automatic") cfg.pencil_mode = PencilMode::automatic;
      else bad_value(key, value);
    } else if (key == "pencil_tol") {
      cfg.pencil_tol = parse_double(key, value);
    } else {
      fail(ErrorCode::invalid_argument, "config: unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

std::string to_string(Task task) { return task == Task::cluster ? "cluster" : "classify"; }

std::string to_string(PencilMode mode) {
  switch (mode) {
    case PencilMode::certified: return "certified";
    case PencilMode::approximate: return "approximate";
    case PencilMode::automatic: return "automatic";
  }
  return "automatic";
}

std::string to_string(const NegativeValue& value) {
  if (const double* d = std::get_if<double>(&value)) return format_double(*d);
  return "auto";
}

std::pair<double, double> mean_std(std::span<const double> values) {
  if (values.empty()) return {kNaN, kNaN};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() == 1) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

void summarize(EvalReport& report) {
  const auto& grid = report.config.sigma_grid;
  report.summary.assign(grid.size(), {});
  std::vector<std::vector<double>> ri(grid.size()), nm(grid.size());
  for (std::size_t si = 0; si < grid.size(); ++si) {
    report.summary[si].sigma_index = si;
    report.summary[si].sigma = grid[si];
  }
  for (const auto& run : report.runs) {
    auto& sum = report.summary[run.sigma_index];
    if (!run.ok) {
      ++sum.runs_failed;
      continue;
    }
    ++sum.runs_ok;
    ri[run.sigma_index].push_back(run.ri);
    if (std::isfinite(run.nmi)) nm[run.sigma_index].push_back(run.nmi);
  }
  report.selected_sigma.reset();
  std::optional<std::size_t> best;
  for (std::size_t si = 0; si < grid.size(); ++si) {
    auto& sum = report.summary[si];
    std::tie(sum.ri_mean, sum.ri_std) = mean_std(ri[si]);
    std::tie(sum.nmi_mean, sum.nmi_std) = mean_std(nm[si]);
    if (sum.runs_ok > 0 && (!best || sum.ri_mean > report.summary[*best].ri_mean)) best = si;
  }
  if (best) {
    report.summary[*best].best = true;
    report.selected_sigma = grid[*best];
  }
}

EvalReport run_pipeline(const ExperimentConfig& config, const DataMatrix& data) {
  config.validate();
  require_labels(data);

  EvalReport report;
  report.protocol = "split";
  report.config = config;
  report.train_fraction = config.split.train_fraction;
  report.ell = config.ell;

  SplitSpec spec = config.split;
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    std::optional<Split> sp;
    std::string split_error;
    try {
      sp = split(data, spec, rep);
    } catch (const Error& e) {
      split_error = error_text(e);
    }
    for (std::size_t si = 0; si < config.sigma_grid.size(); ++si) {
      RunRecord rec = base_record(config, sp.value_or(Split{}), spec.train_fraction, si, rep, config.ell);
      if (!sp) {
        rec.error = split_error;
        report.runs.push_back(std::move(rec));
        continue;
      }
      try {
        const double sigma = config.sigma_grid[si];
        const ScalingOutcome so = scaling_for(config, data.subset(sp->train), sigma);
        copy_scaling(rec, so.diagnostics);
        const Embedding emb = embed_scaled(config, data, so.s, sigma, config.ell);
        score(config, data, *sp, emb.U, derive_seed(config.seed, static_cast<std::uint64_t>(rep), si), rec);
      } catch (const Error& e) {
        rec.ok = false;
        rec.error = error_text(e);
      }
      report.runs.push_back(std::move(rec));
    }
  }
  summarize(report);
  return report;
}

std::vector<EvalReport> sweep(const ExperimentConfig& base, const DataMatrix& data,
                              std::span<const double> fractions) {
  std::vector<EvalReport> out;
  for (double f : fractions) {
    ExperimentConfig cfg = base;
    cfg.split.train_fraction = f;
    out.push_back(run_pipeline(cfg, data));
  }
  return out;
}

std::vector<EvalReport> run_loocv(const ExperimentConfig& base, const DataMatrix& data,
                                  std::span<const Index> ells) {
  ExperimentConfig config = base;
  config.task = Task::classify;
  config.validate();
  require_labels(data);
  if (ells.empty()) fail(ErrorCode::invalid_argument, "loocv: no embedding dimension requested");
  const Index n = data.samples();
  if (n < 3) fail(ErrorCode::insufficient_samples, "loocv: need at least 3 samples");
  const Index ell_max = *std::max_element(ells.begin(), ells.end());

  std::vector<EvalReport> reports(ells.size());
  for (std::size_t e = 0; e < ells.size(); ++e) {
    if (ells[e] < 1) fail(ErrorCode::invalid_argument, "loocv: ell must be >= 1");
    reports[e].protocol = "loocv";
    reports[e].config = config;
    reports[e].config.ell = ells[e];
    reports[e].config.split.repetitions = static_cast<int>(n);
    reports[e].train_fraction = static_cast<double>(n - 1) / static_cast<double>(n);
    reports[e].ell = ells[e];
  }

  // Keyed by sigma index and the exact bytes of s.
  std::map<std::pair<std::size_t, std::string>, Embedding> cache;

  for (Index hold = 0; hold < n; ++hold) {
    Split sp;
    sp.test = {hold};
    for (Index i = 0; i < n; ++i) {
      if (i != hold) sp.train.push_back(i);
    }
    const DataMatrix train = data.subset(sp.train);
    for (std::size_t si = 0; si < config.sigma_grid.size(); ++si) {
      const double sigma = config.sigma_grid[si];
      std::vector<RunRecord> recs;
      for (std::size_t e = 0; e < ells.size(); ++e) {
        recs.push_back(base_record(config, sp, reports[e].train_fraction, si, static_cast<int>(hold), ells[e]));
      }
      try {
        const ScalingOutcome so = scaling_for(config, train, sigma);
        std::string bytes(reinterpret_cast<const char*>(so.s.data()),
                          static_cast<std::size_t>(so.s.size()) * sizeof(double));
        auto key = std::make_pair(si, std::move(bytes));
        auto it = cache.find(key);
        if (it == cache.end()) {
          if (cache.size() >= kEmbeddingCacheLimit) cache.clear();
          it = cache.emplace(std::move(key), embed_scaled(config, data, so.s, sigma, ell_max)).first;
        }
        for (std::size_t e = 0; e < ells.size(); ++e) {
          copy_scaling(recs[e], so.diagnostics);
          score(config, data, sp, it->second.U.leftCols(ells[e]), 0, recs[e]);
        }
      } catch (const Error& err) {
        for (auto& rec : recs) {
          rec.ok = false;
          rec.error = error_text(err);
        }
      }
      for (std::size_t e = 0; e < ells.size(); ++e) reports[e].runs.push_back(std::move(recs[e]));
    }
  }
  for (auto& r : reports) summarize(r);
  return reports;
}

ScalingInspection inspect_scaling(const ExperimentConfig& config, const DataMatrix& data, double sigma) {
  config.validate();
  require_labels(data);
  const Split sp = split(data, config.split, 0);
  const DataMatrix train = data.subset(sp.train);
  std::optional<Eigen::VectorXd> degrees;
  if (std::holds_alternative<AutoNegative>(config.fiedler_negative)) {
    KernelParams kp{sigma, std::min<Index>(config.k_neighbors, train.samples() - 1), std::nullopt};
    degrees = build_similarity(train.values, kp).degrees;
  }
  const FiedlerEstimate fiedler = estimate_fiedler(*train.labels, config.fiedler_negative, degrees);
  ScalingInspection out;
  out.scaling = learn_scaling(assemble_pencil(train.values, fiedler, sigma), {config.pencil_tol, config.pencil_mode});
  out.sigma = sigma;
  out.n_train = train.samples();
  out.linearization_violation = linearization_violation(train.values, out.scaling.s, sigma);
  return out;
}

void write_runs_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << "protocol,task,train_fraction,ell,sigma,repetition,n_train,n_test,status,ri,nmi,"
         "scaled,fallback,certified,mu,residual,constraint_violation,linearization_violation,error\n";
  for (const auto& rep : reports) {
    for (const auto& r : rep.runs) {
      out << rep.protocol << ',' << to_string(rep.config.task) << ',' << format_double(r.train_fraction) << ','
          << r.ell << ',' << format_double(r.sigma) << ',' << r.repetition << ',' << r.n_train << ','
          << r.n_test << ',' << (r.ok ? "ok" : "failed") << ',' << csv_double(r.ri) << ','
          << csv_double(r.nmi) << ',' << r.scaled << ',' << r.fallback << ',' << r.certified << ','
          << csv_double(r.mu) << ',' << csv_double(r.residual) << ',' << csv_double(r.constraint_violation)
          << ',' << csv_double(r.linearization_violation) << ',' << csv_quote(r.error) << '\n';
    }
  }
}

void write_summary_csv(std::ostream& out, std::span<const EvalReport> reports) {
  out << "protocol,task,train_fraction,ell,sigma,runs_ok,runs_failed,ri_mean,ri_std,nmi_mean,nmi_std,best\n";
  for (const auto& rep : reports) {
    for (const auto& s : rep.summary) {
      out << rep.protocol << ',' << to_string(rep.config.task) << ',' << format_double(rep.train_fraction)
          << ',' << rep.ell << ',' << format_double(s.sigma) << ',' << s.runs_ok << ',' << s.runs_failed << ','
          << csv_double(s.ri_mean) << ',' << csv_double(s.ri_std) << ',' << csv_double(s.nmi_mean) << ','
          << csv_double(s.nmi_std) << ',' << s.best << '\n';
    }
  }
}

void print_report(std::ostream& out, const EvalReport& report) {
  const bool cluster = report.config.task == Task::cluster;
  out << report.protocol << ' ' << to_string(report.config.task)
      << (report.config.supervised ? " (scaled)" : " (unscaled)") << "  train_fraction="
      << std::setprecision(4) << report.train_fraction << "  ell=" << report.ell << '\n';
  out << std::setw(10) << "sigma" << std::setw(6) << "ok" << std::setw(8) << "failed" << std::setw(10)
      << "RI" << std::setw(10) << "RI sd";
  if (cluster) out << std::setw(10) << "NMI" << std::setw(10) << "NMI sd";
  out << '\n';
  auto cell = [&](double x) {
    if (std::isfinite(x)) {
      out << std::setw(10) << std::fixed << std::setprecision(4) << x << std::defaultfloat;
    } else {
      out << std::setw(10) << "-";
    }
  };
  for (const auto& s : report.summary) {
    out << std::setw(10) << std::setprecision(6) << s.sigma << std::setw(6) << s.runs_ok << std::setw(8)
        << s.runs_failed;
    cell(s.ri_mean);
    cell(s.ri_std);
    if (cluster) {
      cell(s.nmi_mean);
      cell(s.nmi_std);
    }
    out << (s.best ? "  *" : "") << '\n';
  }
  if (!report.selected_sigma) out << "no sigma produced a successful run\n";
}

std::string manifest_json(const ExperimentConfig& config, const std::string& command, const DataMatrix& data,
                          std::span<const EvalReport> reports) {
  nlohmann::json j;
  j["version"] = version();
  j["command"] = command;
  j["data"] = {{"samples", data.samples()},
               {"features", data.features()},
               {"standardized", data.standardized},
               {"labelled", data.labels.has_value()}};
  j["config"] = {{"task", to_string(config.task)},
                 {"ell", config.ell},
                 {"sigma_grid", config.sigma_grid},
                 {"k_neighbors", config.k_neighbors},
                 {"fiedler_negative", to_string(config.fiedler_negative)},
                 {"train_fraction", config.split.train_fraction},
                 {"repetitions", config.split.repetitions},
                 {"seed", config.seed},
                 {"kmeans_restarts", config.kmeans_restarts},
                 {"max_iter", config.max_iter},
                 {"supervised", config.supervised},
                 {"pencil_mode", to_string(config.pencil_mode)},
                 {"pencil_tol", config.pencil_tol}};
  nlohmann::json results = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json r;
    r["protocol"] = rep.protocol;
    r["train_fraction"] = rep.train_fraction;
    r["ell"] = rep.ell;
    r["selected_sigma"] = rep.selected_sigma ? nlohmann::json(*rep.selected_sigma) : nlohmann::json();
    int fallbacks = 0;
    int failures = 0;
    for (const auto& run : rep.runs) {
      fallbacks += run.fallback ? 1 : 0;
      failures += run.ok ? 0 : 1;
    }
    r["runs"] = rep.runs.size();
    r["failed_runs"] = failures;
    r["fallback_runs"] = fallbacks;
    nlohmann::json sums = nlohmann::json::array();
    for (const auto& s : rep.summary) {
      sums.push_back({{"sigma", s.sigma},
                      {"runs_ok", s.runs_ok},
                      {"ri_mean", json_double(s.ri_mean)},
                      {"ri_std", json_double(s.ri_std)},
                      {"nmi_mean", json_double(s.nmi_mean)},
                      {"best", s.best}});
    }
    r["summary"] = std::move(sums);
    results.push_back(std::move(r));
  }
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

std::string version() { return FEATSCALE_VERSION; }

}  // namespace featscale
