#include "featscale/downstream.hpp"
#include "featscale/error.hpp"
#include "featscale/fscale.hpp"
#include "featscale/metrics.hpp"
#include "featscale/numkernel.hpp"
#include "featscale/pipeline.hpp"
#include "featscale/simgraph.hpp"
#include "featscale/specembed.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
namespace fs = featscale;
using namespace pybind11::literals;

namespace {

fs::DataMatrix make_data(const fs::RowMatrix& X, std::optional<std::vector<int>> labels) {
  fs::DataMatrix d;
  d.values = X;
  for (fs::Index k = 0; k < X.cols(); ++k) d.feature_names.push_back("f" + std::to_string(k + 1));
  if (labels) {
    if (static_cast<fs::Index>(labels->size()) != X.rows()) {
      fs::fail(fs::ErrorCode::shape_mismatch, "labels length differs from rows");
    }
    d.labels = std::move(labels);
  }
  return d;
}

py::dict report_dict(const fs::EvalReport& r) {
  py::list runs;
  for (const auto& run : r.runs) {
    runs.append(py::dict("sigma"_a = run.sigma, "repetition"_a = run.repetition, "ok"_a = run.ok,
                         "error"_a = run.error, "ri"_a = run.ri, "nmi"_a = run.nmi, "fallback"_a = run.fallback,
                         "certified"_a = run.certified, "mu"_a = run.mu, "residual"_a = run.residual));
  }
  py::list summary;
  for (const auto& s : r.summary) {
    summary.append(py::dict("sigma"_a = s.sigma, "runs_ok"_a = s.runs_ok, "runs_failed"_a = s.runs_failed,
                            "ri_mean"_a = s.ri_mean, "ri_std"_a = s.ri_std, "nmi_mean"_a = s.nmi_mean,
                            "best"_a = s.best));
  }
  py::object best = r.selected_sigma ? py::cast(*r.selected_sigma) : py::none();
  return py::dict("protocol"_a = r.protocol, "train_fraction"_a = r.train_fraction, "ell"_a = r.ell,
                  "runs"_a = runs, "summary"_a = summary, "selected_sigma"_a = best);
}

fs::PencilMode parse_mode(const std::string& mode) {
  if (mode == "certified") return fs::PencilMode::certified;
  if (mode == "approximate") return fs::PencilMode::approximate;
  if (mode == "automatic") return fs::PencilMode::automatic;
  fs::fail(fs::ErrorCode::invalid_argument, "unknown pencil mode '" + mode + "'");
}

fs::ExperimentConfig config_from(py::kwargs kw) {
  // Reuse the key = value parser so Python and the CLI accept the same keys.
  std::ostringstream lines;
  for (auto item : kw) {
    const std::string key = py::str(item.first);
    py::handle v = item.second;
    std::string text;
    if (py::isinstance<py::bool_>(v)) {
      text = v.cast<bool>() ? "true" : "false";
    } else if (py::isinstance<py::list>(v) || py::isinstance<py::tuple>(v)) {
      for (auto x : v) text += (text.empty() ? "" : ",") + fs::format_double(x.cast<double>());
    } else if (py::isinstance<py::float_>(v)) {
      text = fs::format_double(v.cast<double>());
    } else {
      text = py::str(v);
    }
    lines << key << " = " << text << '\n';
  }
  std::istringstream in(lines.str());
  return fs::apply_config_text(fs::ExperimentConfig{}, in);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supervised feature scaling for spectral clustering (C++ core)";
  m.attr("__version__") = fs::version();

  // Messages carry the stable error code as a "<code>: " prefix.
  static PyObject* error_type =
      PyErr_NewException("featscale._core.FeatscaleError", PyExc_RuntimeError, nullptr);
  m.attr("FeatscaleError") = py::reinterpret_borrow<py::object>(error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fs::Error& e) {
      const std::string msg = std::string(fs::to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error_type, msg.c_str());
    }
  });

  // numkernel
  m.def(
      "sym_gen_eig",
      [](const Eigen::MatrixXd& L, const Eigen::VectorXd& d, Eigen::Index k, double skip_tol) {
        const auto pairs = fs::numkernel::sym_gen_eig(L, d, k, skip_tol);
        Eigen::VectorXd values(static_cast<Eigen::Index>(pairs.size()));
        Eigen::MatrixXd vectors(L.rows(), static_cast<Eigen::Index>(pairs.size()));
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          values[static_cast<Eigen::Index>(i)] = pairs[i].value;
          vectors.col(static_cast<Eigen::Index>(i)) = pairs[i].vector;
        }
        return py::make_tuple(values, vectors);
      },
      "L"_a, "degrees"_a, "k"_a, "skip_tol"_a = fs::numkernel::kDefaultSkipTol,
      "Smallest nontrivial eigenpairs of L x = lambda D x; returns (values, vectors).");

  m.def(
      "rect_pencil_eig",
      [](const Eigen::MatrixXd& F, const Eigen::MatrixXd& G, double tol, bool strict) {
        fs::numkernel::PencilOptions opts{tol, strict ? fs::numkernel::Certification::strict
                                                      : fs::numkernel::Certification::report_only};
        py::list out;
        for (const auto& p : fs::numkernel::rect_pencil_eig(F, G, opts)) {
          out.append(py::dict("value"_a = p.value, "vector"_a = Eigen::VectorXcd(p.vector),
                              "residual"_a = p.residual, "certified"_a = p.certified));
        }
        return out;
      },
      "F"_a, "G"_a, "residual_tol"_a = fs::numkernel::kDefaultResidualTol, "strict"_a = true);

  // dataio
  m.def(
      "generate_toy",
      [](fs::Index n, std::uint64_t seed) {
        const fs::DataMatrix d = fs::generate_toy(n, seed);
        return py::make_tuple(d.values, *d.labels);
      },
      "n_samples"_a, "seed"_a = 0, "Nested-shell toy set; returns (X, labels).");
  m.def(
      "standardize", [](const fs::RowMatrix& X) { return fs::standardize(make_data(X, std::nullopt)).values; },
      "X"_a);

  // simgraph / specembed
  m.def(
      "build_similarity",
      [](const fs::RowMatrix& X, double sigma, fs::Index k, std::optional<Eigen::VectorXd> scaling) {
        const fs::SimilarityGraph g = fs::build_similarity(X, {sigma, k, std::move(scaling)});
        return py::make_tuple(g.W, g.degrees);
      },
      "X"_a, "sigma"_a = 1.0, "k_neighbors"_a = 7, "scaling"_a = py::none(),
      "Symmetric kNN Gaussian affinity; returns (W as scipy.sparse, degrees).");
  m.def(
      "embed",
      [](const fs::RowMatrix& X, double sigma, fs::Index k, fs::Index ell) {
        const fs::Embedding e = fs::embed(fs::build_similarity(X, {sigma, k, std::nullopt}), ell);
        return py::make_tuple(e.U, e.eigenvalues);
      },
      "X"_a, "sigma"_a = 1.0, "k_neighbors"_a = 7, "ell"_a = 1);

  // fscale
  m.def(
      "learn_scaling",
      [](const fs::RowMatrix& X, const std::vector<int>& labels, double sigma, double negative,
         const std::string& mode, double tol) {
        const fs::FiedlerEstimate f = fs::estimate_fiedler(labels, negative);
        const fs::PencilSystem ps = fs::assemble_pencil(X, f, sigma);
        const fs::ScalingVector sv = fs::learn_scaling(ps, {tol, parse_mode(mode)});
        return py::dict("s"_a = sv.s, "mu"_a = sv.mu, "residual"_a = sv.residual,
                        "constraint_violation"_a = sv.constraint_violation, "certified"_a = sv.certified);
      },
      "X"_a, "labels"_a, "sigma"_a = 1.0, "negative"_a = -0.2, "mode"_a = "automatic",
      "residual_tol"_a = fs::numkernel::kDefaultResidualTol);
  m.def(
      "assemble_pencil",
      [](const fs::RowMatrix& X, const std::vector<int>& labels, double sigma, double negative) {
        const fs::PencilSystem ps = fs::assemble_pencil(X, fs::estimate_fiedler(labels, negative), sigma);
        return py::make_tuple(ps.F(), ps.G());
      },
      "X"_a, "labels"_a, "sigma"_a = 1.0, "negative"_a = -0.2, "Returns the pencil blocks (F, G).");
  m.def(
      "apply_scaling", [](const fs::RowMatrix& Y, const Eigen::VectorXd& s) { return fs::apply_scaling(Y, s).Z; },
      "Y"_a, "s"_a);

  // downstream / metrics
  m.def(
      "kmeans",
      [](const Eigen::MatrixXd& P, int k, int restarts, std::uint64_t seed) {
        const fs::ClusterAssignment a = fs::kmeans(P, k, restarts, seed);
        return py::make_tuple(a.labels, a.inertia);
      },
      "points"_a, "k"_a = 2, "restarts"_a = 20, "seed"_a = 0);
  m.def("nn1_classify", &fs::nn1_classify, "embedded"_a, "train_indices"_a, "train_labels"_a, "test_indices"_a);
  m.def(
      "rand_index",
      [](const std::vector<int>& t, const std::vector<int>& p, bool align) { return fs::rand_index(t, p, align); },
      "truth"_a, "predicted"_a, "align"_a = true);
  m.def(
      "nmi", [](const std::vector<int>& t, const std::vector<int>& p) { return fs::nmi(t, p).value; }, "truth"_a,
      "predicted"_a);

  // pipeline
  m.def(
      "run_pipeline",
      [](const fs::RowMatrix& X, const std::vector<int>& labels, py::kwargs kw) {
        return report_dict(fs::run_pipeline(config_from(kw), make_data(X, labels)));
      },
      "X"_a, "labels"_a,
      "Run the split protocol; keyword arguments use the config-file keys (task, ell, sigma_grid, ...).");
  m.def(
      "run_loocv",
      [](const fs::RowMatrix& X, const std::vector<int>& labels, const std::vector<fs::Index>& ells,
         py::kwargs kw) {
        py::list out;
        for (const auto& r : fs::run_loocv(config_from(kw), make_data(X, labels), ells)) out.append(report_dict(r));
        return out;
      },
      "X"_a, "labels"_a, "ells"_a = std::vector<fs::Index>{1, 2, 3});
}
