#include "featscale/error.hpp"
#include "featscale/specembed.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace featscale;

namespace {

SimilarityGraph graph_from_dense(const Eigen::MatrixXd& W) {
  SimilarityGraph g;
  g.W = W.sparseView();
  g.degrees = W.rowwise().sum();
  g.L = (Eigen::MatrixXd(g.degrees.asDiagonal()) - W).sparseView();
  return g;
}

Eigen::MatrixXd two_cliques() {
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(6, 6);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a != b) W(a, b) = W(a + 3, b + 3) = 1.0;
  return W;
}

}  // namespace

TEST_CASE("embed: two disjoint cliques") {
  // Both zero eigenvalues are deflated, so the first returned vector lives in
  // the within-clique eigenspace (lambda = 3/2) and is D-orthogonal to both
  // clique indicators.
  const SimilarityGraph g = graph_from_dense(two_cliques());
  const Embedding e = embed(g, 1);
  CHECK(e.eigenvalues[0] == doctest::Approx(1.5));
  Eigen::VectorXd ind1 = Eigen::VectorXd::Zero(6), ind2 = Eigen::VectorXd::Zero(6);
  ind1.head(3).setOnes();
  ind2.tail(3).setOnes();
  CHECK(std::abs(ind1.dot(g.degrees.asDiagonal() * e.U.col(0))) < 1e-10);
  CHECK(std::abs(ind2.dot(g.degrees.asDiagonal() * e.U.col(0))) < 1e-10);
  CHECK(e.U(0, 0) >= 0.0);

  Eigen::VectorXd split(6);
  split << 1, 1, 1, -1, -1, -1;
  CHECK(ncut_objective(g, split).value == doctest::Approx(0.0));
}

TEST_CASE("embed: complete graph closed form") {
  for (int n : {3, 5, 9}) {
    const double w = 0.7;
    Eigen::MatrixXd W = Eigen::MatrixXd::Constant(n, n, w);
    W.diagonal().setZero();
    const SimilarityGraph g = graph_from_dense(W);
    const Embedding e = embed(g, 1);
    CHECK(e.eigenvalues[0] == doctest::Approx(static_cast<double>(n) / (n - 1)).epsilon(1e-12));
    CHECK(std::abs(g.degrees.dot(e.U.col(0))) < 1e-10);
    CHECK_THROWS_AS(embed(g, n), Error);
  }
}

TEST_CASE("embed: Rayleigh consistency, oracle spectrum, D-orthonormal") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 10;
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) W(i, j) = W(j, i) = u(rng);
    const SimilarityGraph g = graph_from_dense(W);
    const Embedding e = embed(g, 3);
    const auto ref = oracle::generalized_eigenvalues(Eigen::MatrixXd(g.L), g.degrees);
    for (int c = 0; c < 3; ++c) {
      CHECK(std::abs(e.eigenvalues[c] - ref[static_cast<std::size_t>(c) + 1]) < 1e-8);
      const NcutValue nv = ncut_objective(g, e.U.col(c));
      CHECK(std::abs(nv.value - e.eigenvalues[c]) < 1e-8);
      CHECK(std::abs(nv.constraint_residual) < 1e-8);
      CHECK(ncut_objective(g, -3.5 * e.U.col(c)).value == doctest::Approx(nv.value).epsilon(1e-12));
      for (int d = 0; d < 3; ++d) {
        const double ip = e.U.col(c).dot(g.degrees.asDiagonal() * e.U.col(d));
        CHECK(std::abs(ip - (c == d ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("ncut_objective: constant vector and zero vector") {
  const SimilarityGraph g = graph_from_dense(two_cliques());
  const NcutValue nv = ncut_objective(g, Eigen::VectorXd::Ones(6));
  CHECK(nv.value == doctest::Approx(0.0));
  CHECK(nv.constraint_residual == doctest::Approx(g.degrees.sum()));
  try {
    ncut_objective(g, Eigen::VectorXd::Zero(6));
    FAIL("expected degenerate_vector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::degenerate_vector);
  }
}
