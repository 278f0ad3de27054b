#include "featscale/fscale.hpp"

#include "featscale/error.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace featscale {
namespace {

constexpr double kNormalizableTol = 1e-12;

struct Candidate {
  ScalingVector scaling;
  double distance = 0.0;  // |real(mu) - 1|
  std::size_t order = 0;
};

}  // namespace

FiedlerEstimate estimate_fiedler(std::span<const int> labels, NegativeValue negative,
                                 const std::optional<Eigen::VectorXd>& degrees) {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  for (int l : labels) {
    if (l == 1) {
      ++n1;
    } else if (l == 2) {
      ++n2;
    } else {
      fail(ErrorCode::non_binary_labels, "estimate_fiedler: labels must be 1 or 2");
    }
  }
  if (n1 == 0 || n2 == 0) {
    fail(ErrorCode::degenerate_supervision, "estimate_fiedler: both classes must be present");
  }

  FiedlerEstimate est;
  if (std::holds_alternative<double>(negative)) {
    est.negative_value = std::get<double>(negative);
  } else {
    if (!degrees || degrees->size() != static_cast<Index>(labels.size())) {
      fail(ErrorCode::invalid_argument, "estimate_fiedler: automatic value needs one degree per sample");
    }
    double pos = 0.0;
    double neg = 0.0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const double d = (*degrees)[static_cast<Index>(i)];
      if (!(d > 0.0)) fail(ErrorCode::degenerate_degree, "estimate_fiedler: degrees must be positive");
      (labels[i] == 1 ? pos : neg) += d;
    }
    est.negative_value = -pos / neg;
  }

  est.v.resize(static_cast<Index>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    est.v[static_cast<Index>(i)] = labels[i] == 1 ? est.positive_value : est.negative_value;
  }
  return est;
}

Eigen::MatrixXd PencilSystem::F() const {
  const Index n = samples();
  const Index m = features();
  Eigen::MatrixXd f(n + 1, m + 1);
  f.topLeftCorner(n, m) = A;
  f.topRightCorner(n, 1) = alpha;
  f.bottomLeftCorner(1, m) = gamma.transpose();
  f(n, m) = rho;
  return f;
}

Eigen::MatrixXd PencilSystem::G() const {
  const Index n = samples();
  const Index m = features();
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, m + 1);
  g.topLeftCorner(n, m) = B;
  g.topRightCorner(n, 1) = beta;
  return g;
}

PencilSystem assemble_pencil(const RowMatrix& X, const FiedlerEstimate& fiedler, double sigma) {
  const Index n = X.rows();
  const Index m = X.cols();
  if (n < 2) fail(ErrorCode::insufficient_samples, "assemble_pencil: need at least 2 samples");
  if (fiedler.v.size() != n) fail(ErrorCode::shape_mismatch, "assemble_pencil: Fiedler length differs from samples");
  if (!(sigma > 0.0)) fail(ErrorCode::invalid_argument, "assemble_pencil: sigma must be positive");
  if (!X.allFinite()) fail(ErrorCode::non_finite, "assemble_pencil: non-finite data");

  const Eigen::VectorXd& v = fiedler.v;
  const double inv = 1.0 / (2.0 * sigma * sigma);

  PencilSystem ps;
  ps.sigma = sigma;
  ps.A = Eigen::MatrixXd::Zero(n, m);
  Eigen::MatrixXd xhat = Eigen::MatrixXd::Zero(n, m);
  Eigen::VectorXd diff(m);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      diff = (X.row(i) - X.row(j)).transpose();
      diff = diff.cwiseProduct(diff) * inv;
      ps.A.row(i) += v[j] * diff.transpose();
      ps.A.row(j) += v[i] * diff.transpose();
      xhat.row(i) += diff.transpose();
      xhat.row(j) += diff.transpose();
    }
  }
  ps.B = v.asDiagonal() * xhat;

  ps.alpha.resize(n);
  for (Index i = 0; i < n; ++i) {
    double sum = 0.0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) sum += v[j];
    }
    ps.alpha[i] = sum;
  }
  ps.beta = static_cast<double>(n - 1) * v;
  ps.gamma = ps.B.colwise().sum().transpose();
  ps.rho = static_cast<double>(n - 1) * v.sum();

  const double drift = (ps.A - ps.B).colwise().sum().cwiseAbs().maxCoeff();
  if (drift > 1e-10 * ps.A.norm()) {
    fail(ErrorCode::internal_consistency,
         "assemble_pencil: (A - B)^T e = " + format_double(drift) + " exceeds tolerance");
  }
  return ps;
}

ScalingVector learn_scaling(const PencilSystem& system, const ScalingOptions& options) {
  const Index m = system.features();
  const Eigen::MatrixXd F = system.F();
  const Eigen::MatrixXd G = system.G();

  const PencilMode mode = options.mode;
  numkernel::PencilOptions pencil_opts;
  pencil_opts.residual_tol = options.residual_tol;
  pencil_opts.certification = mode == PencilMode::certified ? numkernel::Certification::strict
                                                            : numkernel::Certification::report_only;

  std::vector<numkernel::EigenPair> pairs;
  try {
    pairs = numkernel::rect_pencil_eig(F, G, pencil_opts);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::no_eigenpair || e.code() == ErrorCode::degenerate_pencil) {
      fail(ErrorCode::no_scaling, std::string("learn_scaling: ") + e.what());
    }
    throw;
  }

  const double f_norm = F.norm();
  const double g_norm = G.norm();
  const double constraint_scale = system.gamma.norm() + std::abs(system.rho);

  std::vector<Candidate> candidates;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& pair = pairs[idx];
    const std::complex<double> last = pair.vector[m];
    if (std::abs(last) < kNormalizableTol) continue;

    const Eigen::VectorXcd s_complex = -pair.vector.head(m) / last;
    Candidate c;
    c.order = idx;
    c.scaling.s = s_complex.real();
    c.scaling.mu = pair.value.real();
    c.scaling.took_real_part = !pair.is_real() || !s_complex.imag().isZero(0.0);
    if (!c.scaling.s.allFinite()) continue;

    Eigen::VectorXd w(m + 1);
    w << c.scaling.s, -1.0;
    c.scaling.residual = (F * w - c.scaling.mu * (G * w)).norm() / (f_norm + std::abs(c.scaling.mu) * g_norm);
    c.scaling.constraint_violation = std::abs(system.gamma.dot(c.scaling.s) - system.rho);
    c.scaling.certified = c.scaling.residual <= options.residual_tol &&
                          c.scaling.constraint_violation <= options.residual_tol * constraint_scale;
    c.distance = std::abs(c.scaling.mu - 1.0);
    candidates.push_back(std::move(c));
  }
  if (candidates.empty()) {
    fail(ErrorCode::non_normalizable,
         "learn_scaling: every eigenvector has a vanishing last component");
  }

  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    if (a.scaling.residual != b.scaling.residual) return a.scaling.residual < b.scaling.residual;
    return a.order < b.order;
  });

  if (mode == PencilMode::approximate) return candidates.front().scaling;
  for (const auto& c : candidates) {
    if (c.scaling.certified) return c.scaling;
  }
  if (mode == PencilMode::automatic) return candidates.front().scaling;
  fail(ErrorCode::no_scaling, "learn_scaling: no normalized eigenvector passes re-certification");
}

ScaledData apply_scaling(const RowMatrix& Y, const Eigen::VectorXd& s) {
  if (Y.cols() != s.size()) {
    fail(ErrorCode::shape_mismatch, "apply_scaling: " + std::to_string(Y.cols()) + " features but " +
                                        std::to_string(s.size()) + " scaling factors");
  }
  ScaledData out;
  out.signs = s.unaryExpr([](double x) { return x < 0.0 ? -1.0 : 1.0; });
  out.Z = Y * s.cwiseAbs().cwiseSqrt().asDiagonal();
  return out;
}

double linearized_weight(const RowMatrix& X, const Eigen::VectorXd& s, double sigma, Index i, Index j) {
  const Eigen::VectorXd d = (X.row(i) - X.row(j)).transpose();
  return 1.0 - s.dot(d.cwiseProduct(d)) / (2.0 * sigma * sigma);
}

double linearization_violation(const RowMatrix& X, const Eigen::VectorXd& s, double sigma) {
  const Index n = X.rows();
  if (n < 2) return 0.0;
  std::size_t bad = 0;
  std::size_t total = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double t = 1.0 - linearized_weight(X, s, sigma, i, j);
      if (!(t > 0.0 && t < 1.0)) ++bad;
      ++total;
    }
  }
  return static_cast<double>(bad) / static_cast<double>(total);
}

void write_scaling_table(std::ostream& out, const std::vector<std::string>& feature_names,
                         const Eigen::VectorXd& s) {
  out << "feature\tfactor\n";
  for (Index k = 0; k < s.size(); ++k) {
    const std::string name = k < static_cast<Index>(feature_names.size())
                                 ? feature_names[static_cast<std::size_t>(k)]
                                 : "f" + std::to_string(k + 1);
    out << name << '\t' << format_double(s[k]) << '\n';
  }
}

}  // namespace featscale
