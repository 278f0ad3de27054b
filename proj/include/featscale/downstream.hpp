#pragma once

#include "featscale/dataio.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

namespace featscale {

struct ClusterAssignment {
  std::vector<int> labels;  // cluster index in [0, k)
  double inertia = 0.0;     // within-cluster sum of squares of the best restart
  int restarts_used = 0;
  int best_restart = 0;
  std::vector<double> inertia_history;  // per Lloyd iteration of the best restart
};

inline constexpr int kDefaultMaxIter = 300;

/// Lloyd's algorithm from `restarts` uniformly sampled sets of k distinct
/// points; returns the restart of least inertia (ties to the earlier one).
/// A cluster that empties is re-seeded at the point farthest from its
/// assigned centroid.
ClusterAssignment kmeans(const Eigen::MatrixXd& points, int k, int restarts, std::uint64_t seed,
                         int max_iter = kDefaultMaxIter);

/// Label each test row with the label of its nearest training row
/// (Euclidean; ties to the smaller training position).
std::vector<int> nn1_classify(const Eigen::MatrixXd& embedded, std::span<const Index> train_indices,
                              std::span<const int> train_labels, std::span<const Index> test_indices);

}  // namespace featscale
