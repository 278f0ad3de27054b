#include "featscale/simgraph.hpp"

#include "featscale/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace featscale {

PairwiseDiffs::PairwiseDiffs(const RowMatrix& X, double sigma)
    : n_(X.rows()), m_(X.cols()), sigma_(sigma) {
  if (n_ < 2) fail(ErrorCode::insufficient_samples, "pairwise_sqdiff: need at least 2 samples");
  if (!(sigma > 0.0)) fail(ErrorCode::invalid_argument, "pairwise_sqdiff: sigma must be positive");
  if (!X.allFinite()) fail(ErrorCode::non_finite, "pairwise_sqdiff: non-finite data");

  data_.assign(static_cast<std::size_t>(n_ * n_ * m_), 0.0);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = i + 1; j < n_; ++j) {
      for (Index k = 0; k < m_; ++k) {
        const double d = X(i, k) - X(j, k);
        data_[static_cast<std::size_t>((i * n_ + j) * m_ + k)] = d * d;
        data_[static_cast<std::size_t>((j * n_ + i) * m_ + k)] = d * d;
      }
    }
  }
  const double inv = 1.0 / (2.0 * sigma * sigma);
  xhat_ = Eigen::MatrixXd::Zero(n_, m_);
  for (Index i = 0; i < n_; ++i) {
    for (Index j = 0; j < n_; ++j) {
      const auto d = diff(i, j);
      for (Index k = 0; k < m_; ++k) xhat_(i, k) += d[static_cast<std::size_t>(k)];
    }
  }
  xhat_ *= inv;
}

Eigen::MatrixXd PairwiseDiffs::block(Index i) const {
  Eigen::MatrixXd out(m_, n_);
  const double inv = 1.0 / (2.0 * sigma_ * sigma_);
  for (Index j = 0; j < n_; ++j) {
    const auto d = diff(i, j);
    for (Index k = 0; k < m_; ++k) out(k, j) = inv * d[static_cast<std::size_t>(k)];
  }
  return out;
}

PairwiseDiffs pairwise_sqdiff(const RowMatrix& X, double sigma) { return PairwiseDiffs(X, sigma); }

SimilarityGraph build_similarity(const RowMatrix& Y, const KernelParams& params) {
  const Index n = Y.rows();
  const Index m = Y.cols();
  if (!(params.sigma > 0.0)) fail(ErrorCode::invalid_argument, "build_similarity: sigma must be positive");
  if (params.k_neighbors < 1 || params.k_neighbors >= n) {
    fail(ErrorCode::invalid_argument, "build_similarity: k_neighbors must lie in [1, N-1]");
  }
  if (params.scaling && params.scaling->size() != m) {
    fail(ErrorCode::shape_mismatch, "build_similarity: scaling length differs from feature count");
  }
  if (!Y.allFinite()) fail(ErrorCode::non_finite, "build_similarity: non-finite data");

  const double inv = 1.0 / (2.0 * params.sigma * params.sigma);
  const Index k = params.k_neighbors;

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(2 * n * k));
  std::vector<double> row(static_cast<std::size_t>(n));
  std::vector<Index> order(static_cast<std::size_t>(n - 1));

  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double delta = 0.0;
      for (Index f = 0; f < m; ++f) {
        const double d = Y(i, f) - Y(j, f);
        delta += (params.scaling ? (*params.scaling)[f] : 1.0) * d * d;
      }
      const double w = std::exp(-delta * inv);
      if (!std::isfinite(w)) {
        fail(ErrorCode::non_finite, "build_similarity: weight between samples " + std::to_string(i) +
                                        " and " + std::to_string(j) + " overflows");
      }
      row[static_cast<std::size_t>(j)] = w;
    }
    std::size_t pos = 0;
    for (Index j = 0; j < n; ++j) {
      if (j != i) order[pos++] = j;
    }
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Index a, Index b) {
      const double wa = row[static_cast<std::size_t>(a)];
      const double wb = row[static_cast<std::size_t>(b)];
      return wa != wb ? wa > wb : a < b;
    });
    for (Index t = 0; t < k; ++t) {
      const Index j = order[static_cast<std::size_t>(t)];
      const double half = 0.5 * row[static_cast<std::size_t>(j)];
      triplets.emplace_back(i, j, half);
      triplets.emplace_back(j, i, half);
    }
  }

  SimilarityGraph g;
  g.W.resize(n, n);
  g.W.setFromTriplets(triplets.begin(), triplets.end());
  g.W.prune(0.0);
  g.degrees = Eigen::VectorXd::Zero(n);
  for (Index c = 0; c < g.W.outerSize(); ++c) {
    for (SparseMatrix::InnerIterator it(g.W, c); it; ++it) g.degrees[it.row()] += it.value();
  }
  for (Index i = 0; i < n; ++i) {
    if (!(g.degrees[i] > 0.0)) {
      fail(ErrorCode::isolated_sample, "build_similarity: sample " + std::to_string(i) +
                                           " is isolated (all kept weights vanish)");
    }
  }
  SparseMatrix D(n, n);
  std::vector<Eigen::Triplet<double>> diag;
  for (Index i = 0; i < n; ++i) diag.emplace_back(i, i, g.degrees[i]);
  D.setFromTriplets(diag.begin(), diag.end());
  g.L = D - g.W;
  return g;
}

}  // namespace featscale
