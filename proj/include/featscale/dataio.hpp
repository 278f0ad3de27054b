#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace featscale {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

/// Samples in rows, features in columns. Labels, when present, are 1 or 2.
struct DataMatrix {
  RowMatrix values;
  std::vector<std::string> feature_names;
  std::optional<std::vector<int>> labels;
  bool standardized = false;

  Index samples() const { return values.rows(); }
  Index features() const { return values.cols(); }

  /// Sub-matrix of the given rows (labels carried along).
  DataMatrix subset(std::span<const Index> rows) const;
};

struct SplitSpec {
  double train_fraction = 0.5;
  std::uint64_t seed = 0;
  int repetitions = 1;
};

struct Split {
  std::vector<Index> train;
  std::vector<Index> test;
};

/// Surrogate two-class data set: features 1-3 hold two nested spherical
/// shells (radius 1 for class 1, radius 3 for class 2, radial jitter 0.05),
/// features 4-10 are independent Uniform[0,1] noise. Classes are balanced.
DataMatrix generate_toy(Index n_samples, std::uint64_t seed);

/// Column-wise zero mean, unit population variance.
DataMatrix standardize(const DataMatrix& data);

struct TextFormat {
  char delimiter = '\0';  // '\0' detects ',' or '\t' from the first line
};

DataMatrix read_matrix(std::istream& in, const TextFormat& format = {});
DataMatrix load_matrix(const std::filesystem::path& path, const TextFormat& format = {});

void write_matrix(std::ostream& out, const DataMatrix& data, char delimiter = ',');
void save_matrix(const std::filesystem::path& path, const DataMatrix& data,
                 char delimiter = ',');

/// Stratified random split; deterministic in (spec.seed, repetition).
Split split(const DataMatrix& data, const SplitSpec& spec, int repetition);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace featscale
