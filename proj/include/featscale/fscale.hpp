#pragma once

#include "featscale/dataio.hpp"
#include "featscale/numkernel.hpp"

#include <Eigen/Dense>

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace featscale {

/// Derive the negative Fiedler entry from degree sums: -b with
/// b = sum_{class 1} d_i / sum_{class 2} d_i.
struct AutoNegative {};

using NegativeValue = std::variant<double, AutoNegative>;

/// Label-derived target for the Fiedler vector of the training graph.
struct FiedlerEstimate {
  Eigen::VectorXd v;
  double positive_value = 1.0;
  double negative_value = -1.0;
};

/// Class-1 samples get 1, class-2 samples get the negative value.
FiedlerEstimate estimate_fiedler(std::span<const int> labels, NegativeValue negative,
                                 const std::optional<Eigen::VectorXd>& degrees = std::nullopt);

/// Blocks of the pencil [A alpha; gamma^T rho] - mu [B beta; 0 0] whose
/// eigenvector [s; -1] holds the feature scaling factors.
struct PencilSystem {
  Eigen::MatrixXd A;      // row i: (X_i v)^T
  Eigen::MatrixXd B;      // row i: v_i x_hat_i^T
  Eigen::VectorXd alpha;  // alpha_i = sum_{j != i} v_j
  Eigen::VectorXd beta;   // (n - 1) v
  Eigen::VectorXd gamma;  // sum_i v_i x_hat_i
  double rho = 0.0;       // (n - 1) sum_i v_i
  double sigma = 1.0;

  Index samples() const { return A.rows(); }
  Index features() const { return A.cols(); }

  Eigen::MatrixXd F() const;
  Eigen::MatrixXd G() const;
};

PencilSystem assemble_pencil(const RowMatrix& X, const FiedlerEstimate& fiedler, double sigma);

enum class PencilMode {
  certified,    // only eigenpairs within residual_tol of the rectangular system
  approximate,  // best available candidates, residual reported but not enforced
  automatic,    // best certified candidate if any, else the best approximate one
};

struct ScalingOptions {
  double residual_tol = numkernel::kDefaultResidualTol;
  PencilMode mode = PencilMode::certified;
};

struct ScalingVector {
  Eigen::VectorXd s;
  double mu = 0.0;
  double residual = 0.0;              // ||(F - mu G)[s; -1]|| / (||F||_F + |mu| ||G||_F)
  double constraint_violation = 0.0;  // |gamma^T s - rho|
  bool certified = false;
  bool took_real_part = false;
};

/// Solves the pencil and keeps the eigenpair whose real(mu) is closest to 1.
/// Throws no_scaling when no candidate qualifies and non_normalizable when
/// every candidate has a vanishing last component.
ScalingVector learn_scaling(const PencilSystem& system, const ScalingOptions& options = {});

/// Z = Y |S|^{1/2}; `signs` restores the signed metric for negative factors.
struct ScaledData {
  RowMatrix Z;
  Eigen::VectorXd signs;

  bool has_negative() const { return (signs.array() < 0.0).any(); }
};

ScaledData apply_scaling(const RowMatrix& Y, const Eigen::VectorXd& s);

/// First-order weight 1 - s^T x_{i,j} / 2 sigma^2 for one pair.
double linearized_weight(const RowMatrix& X, const Eigen::VectorXd& s, double sigma, Index i, Index j);

/// Fraction of pairs i < j whose s^T x_{i,j} / 2 sigma^2 falls outside (0, 1),
/// where the first-order expansion of exp is not justified.
double linearization_violation(const RowMatrix& X, const Eigen::VectorXd& s, double sigma);

/// Two-column table "feature<TAB>factor", one line per feature.
void write_scaling_table(std::ostream& out, const std::vector<std::string>& feature_names,
                         const Eigen::VectorXd& s);

}  // namespace featscale
