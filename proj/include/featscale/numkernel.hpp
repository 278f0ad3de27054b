#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace featscale::numkernel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kDefaultSkipTol = 1e-9;
inline constexpr double kDefaultResidualTol = 1e-6;

/// Eigenpair of the symmetric-definite problem L x = lambda D x.
struct SymEigenPair {
  double value = 0.0;
  Vector vector;          // D-normalized: x^T D x = 1
  double residual = 0.0;  // ||Lx - lambda Dx|| / (||L||_F + |lambda| ||D||_F)
};

/// Eigenpair (mu, w) of a possibly rectangular pencil F - mu G.
struct EigenPair {
  std::complex<double> value;
  ComplexVector vector;  // unit 2-norm, first significant component real positive
  double residual = 0.0; // ||(F - mu G) w|| / (||F||_F + |mu| ||G||_F)
  bool certified = false;

  bool is_real() const { return value.imag() == 0.0; }
};

/// Smallest eigenpairs of L x = lambda D x with D = diag(degrees) > 0.
///
/// Eigenvalues at or below skip_tol * lambda_max are deflated; for a
/// connected graph Laplacian this removes exactly the constant vector, so
/// the returned vectors satisfy e^T D x = 0. Results are ascending and each
/// vector has its first nonzero component positive.
std::vector<SymEigenPair> sym_gen_eig(const Matrix& laplacian, const Vector& degrees,
                                      Eigen::Index k, double skip_tol = kDefaultSkipTol);

enum class Certification {
  strict,       // drop candidates whose residual exceeds residual_tol
  report_only,  // keep every finite candidate, mark `certified` per candidate
};

struct PencilOptions {
  double residual_tol = kDefaultResidualTol;
  Certification certification = Certification::strict;
};

/// Eigenpairs of the (p x q) pencil F - mu G, p and q arbitrary.
///
/// Columns are first compressed onto the leading min(p, rank[F; G]) right
/// singular vectors of the stacked [F; G]; a tall remainder is squared up by
/// G^T premultiplication (or, when G is column-rank deficient, by projecting
/// rows onto the dominant left singular subspace of [F G]); the square pencil
/// is solved by real QZ. Every candidate is then re-measured against the
/// original rectangular F, G. Singular pencils (every mu an eigenvalue)
/// additionally report mu = 1.
std::vector<EigenPair> rect_pencil_eig(const Matrix& F, const Matrix& G,
                                       const PencilOptions& options = {});

double pencil_residual(const Matrix& F, const Matrix& G, std::complex<double> mu,
                       const ComplexVector& w);

}  // namespace featscale::numkernel
