#pragma once

#include "featscale/dataio.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <optional>
#include <span>
#include <vector>

namespace featscale {

using SparseMatrix = Eigen::SparseMatrix<double>;

struct KernelParams {
  double sigma = 1.0;
  Index k_neighbors = 7;
  /// Per-feature weights s in the squared distance sum_k s_k (y_ik - y_jk)^2.
  /// Entries may be negative, in which case weights can exceed 1.
  std::optional<Eigen::VectorXd> scaling;
};

struct SimilarityGraph {
  SparseMatrix W;           // symmetric, zero diagonal
  Eigen::VectorXd degrees;  // row sums of W
  SparseMatrix L;           // diag(degrees) - W

  Index size() const { return W.rows(); }
};

/// Squared coordinate differences x_{i,j}[k] = (x_ik - x_jk)^2 for all pairs,
/// with the per-sample aggregates used by the linearized similarity.
class PairwiseDiffs {
 public:
  PairwiseDiffs(const RowMatrix& X, double sigma);

  Index samples() const { return n_; }
  Index features() const { return m_; }
  double sigma() const { return sigma_; }

  std::span<const double> diff(Index i, Index j) const {
    return {data_.data() + static_cast<std::size_t>((i * n_ + j) * m_), static_cast<std::size_t>(m_)};
  }
  /// X_i = (1 / 2 sigma^2) [x_{i,1}, ..., x_{i,n}], an m x n block.
  Eigen::MatrixXd block(Index i) const;
  /// Row i is x_hat_i = (1 / 2 sigma^2) sum_j x_{i,j}.
  const Eigen::MatrixXd& aggregates() const { return xhat_; }

 private:
  Index n_ = 0;
  Index m_ = 0;
  double sigma_ = 1.0;
  std::vector<double> data_;
  Eigen::MatrixXd xhat_;
};

PairwiseDiffs pairwise_sqdiff(const RowMatrix& X, double sigma);

/// Gaussian similarity restricted to each row's k largest off-diagonal
/// weights (ties to the smaller index), then symmetrized as (W + W^T) / 2.
SimilarityGraph build_similarity(const RowMatrix& Y, const KernelParams& params);

inline SimilarityGraph build_similarity(const DataMatrix& Y, const KernelParams& params) {
  return build_similarity(Y.values, params);
}

}  // namespace featscale
