#include "featscale/dataio.hpp"

#include "featscale/error.hpp"
#include "rng.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

namespace featscale {
namespace {

constexpr double kInnerRadius = 1.0;
constexpr double kOuterRadius = 3.0;
constexpr double kShellJitter = 0.05;
constexpr Index kNoiseFeatures = 7;

std::vector<std::string_view> split_fields(std::string_view line, char delimiter) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(delimiter, start);
    fields.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + what);
}

void check_labels(const std::vector<int>& labels) {
  const bool has1 = std::find(labels.begin(), labels.end(), 1) != labels.end();
  const bool has2 = std::find(labels.begin(), labels.end(), 2) != labels.end();
  if (!has1 || !has2) {
    fail(ErrorCode::degenerate_supervision, "labels must contain both classes 1 and 2");
  }
}

}  // namespace

DataMatrix DataMatrix::subset(std::span<const Index> rows) const {
  DataMatrix out;
  out.values.resize(static_cast<Index>(rows.size()), features());
  for (std::size_t r = 0; r < rows.size(); ++r) out.values.row(static_cast<Index>(r)) = values.row(rows[r]);
  out.feature_names = feature_names;
  out.standardized = standardized;
  if (labels) {
    std::vector<int> sub;
    sub.reserve(rows.size());
    for (Index r : rows) sub.push_back((*labels)[static_cast<std::size_t>(r)]);
    out.labels = std::move(sub);
  }
  return out;
}

DataMatrix generate_toy(Index n_samples, std::uint64_t seed) {
  if (n_samples < 8 || n_samples % 2 != 0) {
    fail(ErrorCode::invalid_argument, "generate_toy: n_samples must be even and >= 8");
  }
  auto rng = detail::make_rng(seed, {0x7079u});
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  DataMatrix data;
  data.values.resize(n_samples, 3 + kNoiseFeatures);
  std::vector<int> labels(static_cast<std::size_t>(n_samples));
  for (Index i = 0; i < n_samples; ++i) {
    const int label = i % 2 == 0 ? 1 : 2;
    labels[static_cast<std::size_t>(i)] = label;

    Eigen::Vector3d dir;
    do {
      dir = {gauss(rng), gauss(rng), gauss(rng)};
    } while (dir.norm() < 1e-12);
    dir.normalize();
    const double radius = (label == 1 ? kInnerRadius : kOuterRadius) + kShellJitter * gauss(rng);
    data.values.row(i).head<3>() = radius * dir.transpose();
    for (Index k = 0; k < kNoiseFeatures; ++k) data.values(i, 3 + k) = unit(rng);
  }
  for (Index k = 0; k < data.features(); ++k) data.feature_names.push_back("f" + std::to_string(k + 1));
  data.labels = std::move(labels);
  return data;
}

DataMatrix standardize(const DataMatrix& data) {
  const Index n = data.samples();
  if (n < 1) fail(ErrorCode::insufficient_samples, "standardize: no samples");
  DataMatrix out = data;
  for (Index k = 0; k < data.features(); ++k) {
    const auto col = data.values.col(k);
    const double mean = col.mean();
    const double var = (col.array() - mean).square().sum() / static_cast<double>(n);
    if (!(var > 1e-12)) {
      const std::string name = k < static_cast<Index>(data.feature_names.size())
                                   ? data.feature_names[static_cast<std::size_t>(k)]
                                   : "#" + std::to_string(k + 1);
      fail(ErrorCode::zero_variance, "standardize: feature '" + name + "' has zero variance");
    }
    out.values.col(k) = (col.array() - mean) / std::sqrt(var);
  }
  out.standardized = true;
  return out;
}

DataMatrix read_matrix(std::istream& in, const TextFormat& format) {
  std::string line;
  std::size_t line_no = 0;
  char delimiter = format.delimiter;

  std::vector<std::string> header;
  std::optional<std::size_t> label_col;
  std::vector<double> flat;
  std::vector<int> labels;
  std::size_t width = 0;
  Index rows = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (delimiter == '\0') delimiter = view.find('\t') != std::string_view::npos ? '\t' : ',';
    const auto fields = split_fields(view, delimiter);

    if (width == 0) {
      width = fields.size();
      const bool numeric = std::all_of(fields.begin(), fields.end(),
                                       [](std::string_view f) { return parse_number(f).has_value(); });
      if (!numeric) {
        for (std::size_t c = 0; c < fields.size(); ++c) {
          const std::string name(trim(fields[c]));
          if (name == "label") {
            label_col = c;
          } else {
            header.push_back(name);
          }
        }
        continue;
      }
    }
    if (fields.size() != width) {
      parse_fail(line_no, "expected " + std::to_string(width) + " fields, found " +
                              std::to_string(fields.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (trim(fields[c]).empty()) parse_fail(line_no, "missing value in column " + std::to_string(c + 1));
      const auto value = parse_number(fields[c]);
      if (!value) {
        parse_fail(line_no, "non-numeric cell '" + std::string(trim(fields[c])) + "' in column " +
                                std::to_string(c + 1));
      }
      if (label_col && c == *label_col) {
        if (*value != 1.0 && *value != 2.0) parse_fail(line_no, "label must be 1 or 2");
        labels.push_back(static_cast<int>(*value));
      } else {
        flat.push_back(*value);
      }
    }
    ++rows;
  }
  if (rows == 0) fail(ErrorCode::parse_error, "no data rows");

  const Index cols = static_cast<Index>(width - (label_col ? 1 : 0));
  DataMatrix data;
  data.values = Eigen::Map<const RowMatrix>(flat.data(), rows, cols);
  if (header.empty()) {
    for (Index k = 0; k < cols; ++k) data.feature_names.push_back("f" + std::to_string(k + 1));
  } else {
    data.feature_names = std::move(header);
  }
  if (label_col) {
    check_labels(labels);
    data.labels = std::move(labels);
  }
  return data;
}

DataMatrix load_matrix(const std::filesystem::path& path, const TextFormat& format) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open " + path.string());
  return read_matrix(in, format);
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_matrix(std::ostream& out, const DataMatrix& data, char delimiter) {
  for (std::size_t k = 0; k < data.feature_names.size(); ++k) {
    if (k > 0) out << delimiter;
    out << data.feature_names[k];
  }
  if (data.labels) out << delimiter << "label";
  out << '\n';
  for (Index i = 0; i < data.samples(); ++i) {
    for (Index k = 0; k < data.features(); ++k) {
      if (k > 0) out << delimiter;
      out << format_double(data.values(i, k));
    }
    if (data.labels) out << delimiter << (*data.labels)[static_cast<std::size_t>(i)];
    out << '\n';
  }
}

void save_matrix(const std::filesystem::path& path, const DataMatrix& data, char delimiter) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::invalid_argument, "cannot write " + path.string());
  write_matrix(out, data, delimiter);
}

Split split(const DataMatrix& data, const SplitSpec& spec, int repetition) {
  if (!data.labels) fail(ErrorCode::invalid_argument, "split: data has no labels");
  if (!(spec.train_fraction > 0.0 && spec.train_fraction <= 1.0)) {
    fail(ErrorCode::invalid_argument, "split: train_fraction must lie in (0, 1]");
  }
  const auto& labels = *data.labels;
  auto rng = detail::make_rng(spec.seed, {0x5b17u, static_cast<std::uint64_t>(repetition)});

  Split out;
  for (int cls : {1, 2}) {
    std::vector<Index> members;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == cls) members.push_back(static_cast<Index>(i));
    }
    std::shuffle(members.begin(), members.end(), rng);
    const auto take = static_cast<std::size_t>(
        std::llround(spec.train_fraction * static_cast<double>(members.size())));
    if (take == 0) {
      fail(ErrorCode::split_failed, "split: class " + std::to_string(cls) +
                                        " receives no training samples at fraction " +
                                        format_double(spec.train_fraction));
    }
    out.train.insert(out.train.end(), members.begin(), members.begin() + static_cast<std::ptrdiff_t>(take));
    out.test.insert(out.test.end(), members.begin() + static_cast<std::ptrdiff_t>(take), members.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace featscale
