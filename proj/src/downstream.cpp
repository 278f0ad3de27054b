#include "featscale/downstream.hpp"

#include "featscale/error.hpp"
#include "rng.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace featscale {
namespace {

struct LloydResult {
  std::vector<int> labels;
  double inertia = 0.0;
  std::vector<double> history;
};

double assign(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids, std::vector<int>& labels) {
  double inertia = 0.0;
  for (Index i = 0; i < points.rows(); ++i) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Index c = 0; c < centroids.rows(); ++c) {
      const double d = (points.row(i) - centroids.row(c)).squaredNorm();
      if (d < best_d) {
        best_d = d;
        best = static_cast<int>(c);
      }
    }
    labels[static_cast<std::size_t>(i)] = best;
    inertia += best_d;
  }
  return inertia;
}

LloydResult lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd centroids, int max_iter) {
  const Index n = points.rows();
  const Index k = centroids.rows();
  LloydResult r;
  r.labels.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> next(static_cast<std::size_t>(n));

  r.inertia = assign(points, centroids, r.labels);
  r.history.push_back(r.inertia);
  for (int iter = 0; iter < max_iter; ++iter) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<Index> counts(static_cast<std::size_t>(k), 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(r.labels[static_cast<std::size_t>(i)]) += points.row(i);
      ++counts[static_cast<std::size_t>(r.labels[static_cast<std::size_t>(i)])];
    }
    for (Index c = 0; c < k; ++c) {
      if (counts[static_cast<std::size_t>(c)] > 0) {
        centroids.row(c) = sums.row(c) / static_cast<double>(counts[static_cast<std::size_t>(c)]);
        continue;
      }
      // Empty cluster: move it onto the worst-served point.
      Index far = 0;
      double far_d = -1.0;
      for (Index i = 0; i < n; ++i) {
        const double d = (points.row(i) - centroids.row(r.labels[static_cast<std::size_t>(i)])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      centroids.row(c) = points.row(far);
    }
    const double inertia = assign(points, centroids, next);
    r.history.push_back(inertia);
    r.inertia = inertia;
    if (next == r.labels) break;
    r.labels.swap(next);
  }
  return r;
}

}  // namespace

ClusterAssignment kmeans(const Eigen::MatrixXd& points, int k, int restarts, std::uint64_t seed, int max_iter) {
  const Index n = points.rows();
  if (k < 1 || k > n) fail(ErrorCode::invalid_argument, "kmeans: k must lie in [1, N]");
  if (restarts < 1) fail(ErrorCode::invalid_argument, "kmeans: restarts must be at least 1");
  if (max_iter < 1) fail(ErrorCode::invalid_argument, "kmeans: max_iter must be at least 1");
  if (!points.allFinite()) fail(ErrorCode::non_finite, "kmeans: non-finite points");

  ClusterAssignment best;
  best.inertia = std::numeric_limits<double>::infinity();
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});

  for (int r = 0; r < restarts; ++r) {
    auto rng = detail::make_rng(seed, {0x6b6du, static_cast<std::uint64_t>(r)});
    std::vector<Index> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), k, rng);
    std::shuffle(chosen.begin(), chosen.end(), rng);
    Eigen::MatrixXd centroids(k, points.cols());
    for (int c = 0; c < k; ++c) centroids.row(c) = points.row(chosen[static_cast<std::size_t>(c)]);

    LloydResult run = lloyd(points, std::move(centroids), max_iter);
    if (run.inertia < best.inertia) {
      best.labels = std::move(run.labels);
      best.inertia = run.inertia;
      best.inertia_history = std::move(run.history);
      best.best_restart = r;
    }
  }
  best.restarts_used = restarts;
  return best;
}

std::vector<int> nn1_classify(const Eigen::MatrixXd& embedded, std::span<const Index> train_indices,
                              std::span<const int> train_labels, std::span<const Index> test_indices) {
  if (train_indices.empty()) fail(ErrorCode::empty_training, "nn1_classify: empty training set");
  if (train_indices.size() != train_labels.size()) {
    fail(ErrorCode::shape_mismatch, "nn1_classify: one label per training index required");
  }
  const Index n = embedded.rows();
  auto check = [n](Index i) {
    if (i < 0 || i >= n) fail(ErrorCode::invalid_argument, "nn1_classify: index " + std::to_string(i) + " out of range");
  };
  for (Index i : train_indices) check(i);

  std::vector<int> out;
  out.reserve(test_indices.size());
  for (Index t : test_indices) {
    check(t);
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < train_indices.size(); ++j) {
      const double d = (embedded.row(t) - embedded.row(train_indices[j])).squaredNorm();
      if (d < best_d || (d == best_d && train_indices[j] < train_indices[best])) {
        best_d = d;
        best = j;
      }
    }
    out.push_back(train_labels[best]);
  }
  return out;
}

}  // namespace featscale
