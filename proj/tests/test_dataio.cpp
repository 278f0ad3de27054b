#include "featscale/dataio.hpp"
#include "featscale/error.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

using namespace featscale;

namespace {

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal_consistency;
}

DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  DataMatrix d;
  d.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index k = 0;
    for (double v : r) d.values(i, k++) = v;
    ++i;
  }
  for (Index k = 0; k < d.features(); ++k) d.feature_names.push_back("c" + std::to_string(k));
  return d;
}

}  // namespace

TEST_CASE("generate_toy: shape, balance, determinism, noise moments") {
  const DataMatrix a = generate_toy(800, 42);
  const DataMatrix b = generate_toy(800, 42);
  CHECK(a.samples() == 800);
  CHECK(a.features() == 10);
  REQUIRE(a.labels);
  CHECK(std::count(a.labels->begin(), a.labels->end(), 1) == 400);
  CHECK(a.values == b.values);
  CHECK(*a.labels == *b.labels);
  CHECK(a.values != generate_toy(800, 43).values);
  const double tol = 3.0 / std::sqrt(12.0 * 800.0);
  for (Index k = 3; k < 10; ++k) {
    CHECK(std::abs(a.values.col(k).mean() - 0.5) < tol);
    CHECK(a.values.col(k).minCoeff() >= 0.0);
    CHECK(a.values.col(k).maxCoeff() < 1.0);
  }
  CHECK(code_of([] { generate_toy(7, 0); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { generate_toy(6, 0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("standardize") {
  const DataMatrix two = standardize(from_rows({{0.0}, {2.0}}));
  CHECK(two.values(0, 0) == doctest::Approx(-1.0));
  CHECK(two.values(1, 0) == doctest::Approx(1.0));
  CHECK(two.standardized);

  const DataMatrix toy = standardize(generate_toy(200, 1));
  for (Index k = 0; k < toy.features(); ++k) {
    const auto col = toy.values.col(k);
    CHECK(std::abs(col.mean()) < 1e-10);
    CHECK(std::abs(col.squaredNorm() / 200.0 - 1.0) < 1e-10);
  }
  const DataMatrix again = standardize(toy);
  CHECK((again.values - toy.values).cwiseAbs().maxCoeff() < 1e-10);

  try {
    standardize(from_rows({{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}}));
    FAIL("expected zero_variance");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::zero_variance);
    CHECK(std::string(e.what()).find("c0") != std::string::npos);
  }
}

TEST_CASE("read_matrix: header, labels, errors") {
  std::istringstream csv("a,b\n1,2\n3,4\n5,6\n");
  const DataMatrix d = read_matrix(csv);
  CHECK(d.samples() == 3);
  CHECK(d.features() == 2);
  CHECK(d.feature_names == std::vector<std::string>{"a", "b"});
  CHECK(d.values(2, 1) == 6.0);
  CHECK_FALSE(d.labels);

  std::istringstream tsv("x\tlabel\ty\n1\t1\t2\n3\t2\t4\n");
  const DataMatrix t = read_matrix(tsv);
  REQUIRE(t.labels);
  CHECK(*t.labels == std::vector<int>{1, 2});
  CHECK(t.values(1, 1) == 4.0);

  std::istringstream headless("1,2\n3,4\n");
  CHECK(read_matrix(headless).feature_names == std::vector<std::string>{"f1", "f2"});

  auto parse_err = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_matrix(in);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::parse_error);
      return std::string(e.what());
    }
    FAIL("expected parse error");
    return std::string();
  };
  CHECK(parse_err("a,b\n1,2\n3\n").find("line 3") != std::string::npos);
  CHECK(parse_err("a,b\n1,\n").find("missing") != std::string::npos);
  CHECK(parse_err("a,b\n1,x\n").find("non-numeric") != std::string::npos);
  CHECK(parse_err("a,label\n1,3\n").find("label") != std::string::npos);
  std::istringstream one_class("a,label\n1,1\n2,1\n");
  CHECK(code_of([&] { read_matrix(one_class); }) == ErrorCode::degenerate_supervision);
}

TEST_CASE("write/read round trip is bit-identical on a wide matrix") {
  DataMatrix d;
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g(0.0, 1.0);
  d.values = RowMatrix::NullaryExpr(24, 2000, [&] { return g(rng) * 1e3; });
  for (Index k = 0; k < 2000; ++k) d.feature_names.push_back("g" + std::to_string(k));
  std::vector<int> labels(24);
  for (int i = 0; i < 24; ++i) labels[static_cast<std::size_t>(i)] = 1 + i % 2;
  d.labels = labels;
  std::stringstream buf;
  write_matrix(buf, d);
  const DataMatrix back = read_matrix(buf);
  CHECK(back.values == d.values);
  CHECK(back.feature_names == d.feature_names);
  CHECK(*back.labels == labels);
}

TEST_CASE("split: stratified, deterministic, disjoint cover") {
  const DataMatrix toy = generate_toy(800, 0);
  const Split a = split(toy, {0.5, 7, 10}, 3);
  const Split b = split(toy, {0.5, 7, 10}, 3);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);
  CHECK(a.train.size() == 400);
  CHECK(split(toy, {0.5, 7, 10}, 4).train != a.train);

  std::set<Index> all(a.train.begin(), a.train.end());
  for (Index i : a.test) CHECK(all.insert(i).second);
  CHECK(all.size() == 800);

  const Split full = split(toy, {1.0, 0, 1}, 0);
  CHECK(full.train.size() == 800);
  CHECK(full.test.empty());

  const DataMatrix tiny = generate_toy(8, 0);
  CHECK(code_of([&] { split(tiny, {0.05, 0, 1}, 0); }) == ErrorCode::split_failed);
  CHECK(code_of([&] { split(tiny, {0.0, 0, 1}, 0); }) == ErrorCode::invalid_argument);
}
