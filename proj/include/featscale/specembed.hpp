#pragma once

#include "featscale/numkernel.hpp"
#include "featscale/simgraph.hpp"

namespace featscale {

/// Columns are the generalized eigenvectors u_1..u_ell of L u = lambda D u
/// for the smallest eigenvalues above the deflation threshold.
struct Embedding {
  Eigen::MatrixXd U;           // N x ell, D-orthonormal columns
  Eigen::VectorXd eigenvalues; // ascending
  Index ell = 0;
};

Embedding embed(const SimilarityGraph& graph, Index ell,
                double skip_tol = numkernel::kDefaultSkipTol);

struct NcutValue {
  double value = 0.0;                // v^T (D - W) v / v^T D v
  double constraint_residual = 0.0;  // e^T D v
};

NcutValue ncut_objective(const SimilarityGraph& graph, const Eigen::VectorXd& v);

}  // namespace featscale
