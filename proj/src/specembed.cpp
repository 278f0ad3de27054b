#include "featscale/specembed.hpp"

#include "featscale/error.hpp"

#include <cmath>

namespace featscale {

Embedding embed(const SimilarityGraph& graph, Index ell, double skip_tol) {
  if (ell < 1) fail(ErrorCode::invalid_argument, "embed: ell must be at least 1");
  const Eigen::MatrixXd laplacian(graph.L);
  const auto pairs = numkernel::sym_gen_eig(laplacian, graph.degrees, ell, skip_tol);

  Embedding out;
  out.ell = ell;
  out.U.resize(graph.size(), ell);
  out.eigenvalues.resize(ell);
  for (Index c = 0; c < ell; ++c) {
    out.U.col(c) = pairs[static_cast<std::size_t>(c)].vector;
    out.eigenvalues[c] = pairs[static_cast<std::size_t>(c)].value;
  }
  return out;
}

NcutValue ncut_objective(const SimilarityGraph& graph, const Eigen::VectorXd& v) {
  if (v.size() != graph.size()) fail(ErrorCode::shape_mismatch, "ncut_objective: vector length");
  const Eigen::VectorXd dv = graph.degrees.cwiseProduct(v);
  const double denom = v.dot(dv);
  if (denom == 0.0 || !std::isfinite(denom)) {
    fail(ErrorCode::degenerate_vector, "ncut_objective: v^T D v vanishes");
  }
  const Eigen::VectorXd lv = graph.L * v;
  return {v.dot(lv) / denom, dv.sum()};
}

}  // namespace featscale
