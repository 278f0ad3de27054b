#pragma once

#include <array>
#include <span>

namespace featscale {

/// 2 x 2 table of true class (rows) against predicted class (columns).
/// The two label values are taken from the union of both labelings, sorted.
struct Contingency {
  std::array<std::array<long, 2>, 2> counts{};
  std::array<long, 2> truth_sizes{};      // n_i
  std::array<long, 2> predicted_sizes{};  // n'_j
  long total = 0;
  std::array<int, 2> values{};            // label value for index 0 and 1
};

Contingency contingency(std::span<const int> truth, std::span<const int> predicted);

/// (TP + TN) / (TP + TN + FP + FN), i.e. the fraction of samples whose
/// predicted class equals the true one. With `align`, the better of the two
/// cluster-to-class identifications is used.
double rand_index(std::span<const int> truth, std::span<const int> predicted, bool align);

struct NmiResult {
  double value = 0.0;
  bool degenerate = false;  // one labeling is constant; value forced to 0
};

/// Binary normalized mutual information,
///   sum n_ij log(n n_ij / (n_i n'_j)) / sqrt(sum n_i log(n_i/n) * sum n'_j log(n'_j/n)),
/// with 0 log 0 = 0.
NmiResult nmi(std::span<const int> truth, std::span<const int> predicted);

}  // namespace featscale
