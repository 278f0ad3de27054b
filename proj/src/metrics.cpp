#include "featscale/metrics.hpp"

#include "featscale/error.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace featscale {
namespace {

double xlogy(double x, double ratio) { return x == 0.0 ? 0.0 : x * std::log(ratio); }

}  // namespace

Contingency contingency(std::span<const int> truth, std::span<const int> predicted) {
  if (truth.size() != predicted.size()) {
    fail(ErrorCode::shape_mismatch, "metrics: labelings differ in length");
  }
  if (truth.empty()) fail(ErrorCode::invalid_argument, "metrics: empty labelings");

  std::vector<int> values(truth.begin(), truth.end());
  values.insert(values.end(), predicted.begin(), predicted.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() > 2) fail(ErrorCode::non_binary_labels, "metrics: more than two label values");

  Contingency c;
  c.values = {values[0], values.size() == 2 ? values[1] : values[0]};
  auto index = [&](int label) { return label == c.values[0] ? 0 : 1; };
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const int a = index(truth[i]);
    const int b = index(predicted[i]);
    ++c.counts[a][b];
    ++c.truth_sizes[a];
    ++c.predicted_sizes[b];
  }
  c.total = static_cast<long>(truth.size());
  return c;
}

double rand_index(std::span<const int> truth, std::span<const int> predicted, bool align) {
  const Contingency c = contingency(truth, predicted);
  const long agree = c.counts[0][0] + c.counts[1][1];
  const long swapped = c.counts[0][1] + c.counts[1][0];
  const long hits = align ? std::max(agree, swapped) : agree;
  return static_cast<double>(hits) / static_cast<double>(c.total);
}

NmiResult nmi(std::span<const int> truth, std::span<const int> predicted) {
  const Contingency c = contingency(truth, predicted);
  const double n = static_cast<double>(c.total);

  double hx = 0.0;
  double hy = 0.0;
  for (int i = 0; i < 2; ++i) {
    hx += xlogy(static_cast<double>(c.truth_sizes[i]), static_cast<double>(c.truth_sizes[i]) / n);
    hy += xlogy(static_cast<double>(c.predicted_sizes[i]), static_cast<double>(c.predicted_sizes[i]) / n);
  }
  if (hx == 0.0 || hy == 0.0) return {0.0, true};

  double mi = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double nij = static_cast<double>(c.counts[i][j]);
      mi += xlogy(nij, n * nij / (static_cast<double>(c.truth_sizes[i]) *
                                  static_cast<double>(c.predicted_sizes[j])));
    }
  }
  // Rounding can push a perfect match a few ulps past 1.
  return {std::clamp(mi / std::sqrt(hx * hy), 0.0, 1.0), false};
}

}  // namespace featscale
