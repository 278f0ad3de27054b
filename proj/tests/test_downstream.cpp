#include "featscale/downstream.hpp"
#include "featscale/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace featscale;

TEST_CASE("kmeans: two tight blobs") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  Eigen::MatrixXd P(8, 1);
  for (int i = 0; i < 8; ++i) P(i, 0) = (i < 4 ? -10.0 : 10.0) + u(rng);
  const ClusterAssignment a = kmeans(P, 2, 20, 3);
  for (int i = 1; i < 4; ++i) CHECK(a.labels[static_cast<std::size_t>(i)] == a.labels[0]);
  for (int i = 5; i < 8; ++i) CHECK(a.labels[static_cast<std::size_t>(i)] == a.labels[4]);
  CHECK(a.labels[0] != a.labels[4]);
  CHECK(a.inertia == doctest::Approx(oracle::kmeans_optimum(P, 2)).epsilon(1e-12));
}

TEST_CASE("kmeans: k = 1 and identical points") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  const Eigen::MatrixXd P = Eigen::MatrixXd::NullaryExpr(12, 2, [&] { return g(rng); });
  const ClusterAssignment one = kmeans(P, 1, 3, 0);
  const Eigen::RowVectorXd mean = P.colwise().mean();
  CHECK(one.inertia == doctest::Approx((P.rowwise() - mean).squaredNorm()));

  const Eigen::MatrixXd same = Eigen::MatrixXd::Constant(6, 2, 1.5);
  const ClusterAssignment a = kmeans(same, 2, 5, 9);
  const ClusterAssignment b = kmeans(same, 2, 5, 9);
  CHECK(a.inertia == 0.0);
  CHECK(a.labels == b.labels);
  for (int l : a.labels) CHECK((l >= 0 && l < 2));
}

TEST_CASE("kmeans: determinism, monotone inertia, optimality at desk scale") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::MatrixXd P = Eigen::MatrixXd::NullaryExpr(8, 2, [&] { return g(rng); });
    const ClusterAssignment a = kmeans(P, 2, 200, static_cast<std::uint64_t>(trial));
    const ClusterAssignment b = kmeans(P, 2, 200, static_cast<std::uint64_t>(trial));
    CHECK(a.labels == b.labels);
    CHECK(a.inertia == b.inertia);
    for (std::size_t i = 1; i < a.inertia_history.size(); ++i) {
      CHECK(a.inertia_history[i] <= a.inertia_history[i - 1] * (1 + 1e-12));
    }
    CHECK(a.inertia == doctest::Approx(oracle::kmeans_optimum(P, 2)).epsilon(1e-10));
  }
}

TEST_CASE("kmeans: invalid arguments") {
  const Eigen::MatrixXd P = Eigen::MatrixXd::Zero(3, 1);
  CHECK_THROWS_AS(kmeans(P, 4, 1, 0), Error);
  CHECK_THROWS_AS(kmeans(P, 2, 0, 0), Error);
}

TEST_CASE("nn1_classify: hand cases") {
  Eigen::MatrixXd E(3, 1);
  E << -1, 1, 0;
  const std::vector<Index> train{0, 1};
  const std::vector<int> labels{1, 2};
  const std::vector<Index> test{2};
  CHECK(nn1_classify(E, train, labels, test) == std::vector<int>{1});

  Eigen::MatrixXd C(3, 2);
  C << 0, 0, 5, 5, 5, 5;
  const std::vector<Index> tr{0, 1};
  const std::vector<Index> te{2};
  CHECK(nn1_classify(C, tr, labels, te) == std::vector<int>{2});

  CHECK_THROWS_AS(nn1_classify(E, {}, {}, test), Error);
}

TEST_CASE("nn1_classify: brute-force oracle and rotation invariance") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::MatrixXd E = Eigen::MatrixXd::NullaryExpr(5, 2, [&] { return g(rng); });
    const std::vector<Index> train{0, 2, 4};
    const std::vector<int> labels{1, 2, 1};
    const std::vector<Index> test{1, 3};
    const auto got = nn1_classify(E, train, labels, test);
    CHECK(got == oracle::nearest_neighbor(E, train, labels, test));
    const double t = 0.3 + trial;
    Eigen::Matrix2d R;
    R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    const Eigen::MatrixXd rotated = E * R.transpose();
    CHECK(nn1_classify(rotated, train, labels, test) == got);
  }
}
