#include "featscale/numkernel.hpp"

#include "featscale/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace featscale::numkernel {
namespace {

using ComplexMatrix = Eigen::MatrixXcd;

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool all_finite(const Matrix& m) { return m.allFinite(); }

// First component whose magnitude is significant relative to the largest.
Eigen::Index leading_index(const ComplexVector& w) {
  const double cap = w.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (std::abs(w[i]) > 1e-10 * cap) return i;
  }
  return 0;
}

// Unit norm, first significant component real and positive.
void canonicalize(ComplexVector& w) {
  const double norm = w.norm();
  if (norm == 0.0) return;
  w /= norm;
  const auto lead = w[leading_index(w)];
  w *= std::conj(lead) / std::abs(lead);
  w[leading_index(w)] = std::abs(w[leading_index(w)]);
}

void canonicalize(Vector& x) {
  const double cap = x.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) > 1e-10 * cap) {
      if (x[i] < 0) x = -x;
      return;
    }
  }
}

// Lexicographic "greater" on vectors; used only to order exact ties.
template <typename V>
bool lex_greater(const V& a, const V& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    const double x = std::real(a[i]);
    const double y = std::real(b[i]);
    if (x != y) return x > y;
  }
  return false;
}

// Right singular vector of the smallest singular value, plus that value.
ComplexVector null_direction(const ComplexMatrix& m, double* sigma_min = nullptr) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::Index last = m.cols() - 1;
  if (sigma_min != nullptr) {
    *sigma_min = m.rows() >= m.cols() ? svd.singularValues()[last] : 0.0;
  }
  return svd.matrixV().col(last);
}

Vector null_direction(const Matrix& m, double* sigma_min = nullptr) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const Eigen::Index last = m.cols() - 1;
  if (sigma_min != nullptr) {
    *sigma_min = m.rows() >= m.cols() ? svd.singularValues()[last] : 0.0;
  }
  return svd.matrixV().col(last);
}

// Square pencil extracted from the (possibly compressed) tall or square one.
struct SquarePencil {
  Matrix lhs;
  Matrix rhs;
};

SquarePencil square_up(const Matrix& F, const Matrix& G) {
  if (F.rows() == F.cols()) return {F, G};

  Eigen::JacobiSVD<Matrix> gsvd(G);
  const auto& gs = gsvd.singularValues();
  const bool well_conditioned = gs[0] > 0.0 && gs[gs.size() - 1] > 1e-8 * gs[0];
  if (well_conditioned) {
    return {G.transpose() * F, G.transpose() * G};
  }

  Matrix stacked(F.rows(), 2 * F.cols());
  stacked << F, G;
  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeThinU);
  const Matrix basis = svd.matrixU().leftCols(F.cols());
  return {basis.transpose() * F, basis.transpose() * G};
}

bool is_singular_pencil(const Matrix& F, const Matrix& G) {
  static constexpr std::array<double, 3> kProbes = {0.5772156649015329, -1.618033988749895,
                                                    2.718281828459045};
  const double nf = F.norm();
  const double ng = G.norm();
  for (double mu : kProbes) {
    double smin = 0.0;
    null_direction(Matrix(F - mu * G), &smin);
    if (smin > 1e-10 * (nf + std::abs(mu) * ng)) return false;
  }
  return true;
}

}  // namespace

std::vector<SymEigenPair> sym_gen_eig(const Matrix& laplacian, const Vector& degrees,
                                      Eigen::Index k, double skip_tol) {
  const Eigen::Index n = laplacian.rows();
  if (laplacian.cols() != n || degrees.size() != n) {
    fail(ErrorCode::shape_mismatch, "sym_gen_eig: L must be square and match D");
  }
  if (k < 1 || k > n) {
    fail(ErrorCode::invalid_argument,
         "sym_gen_eig: k=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (!all_finite(laplacian) || !degrees.allFinite()) {
    fail(ErrorCode::non_finite, "sym_gen_eig: non-finite input");
  }
  const double scale = std::max(1.0, laplacian.cwiseAbs().maxCoeff());
  if ((laplacian - laplacian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    fail(ErrorCode::invalid_argument, "sym_gen_eig: L is not symmetric");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(degrees[i] > 0.0)) {
      fail(ErrorCode::degenerate_degree,
           "sym_gen_eig: degree of row " + std::to_string(i) + " is not positive");
    }
  }

  const Vector inv_sqrt = degrees.cwiseSqrt().cwiseInverse();
  Matrix whitened = inv_sqrt.asDiagonal() * laplacian * inv_sqrt.asDiagonal();
  whitened = 0.5 * (whitened + whitened.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<Matrix> solver(whitened);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::insufficient_spectrum, "sym_gen_eig: eigensolver did not converge");
  }
  const Vector& values = solver.eigenvalues();
  const double lambda_max = values[n - 1];
  const double threshold = skip_tol * lambda_max;

  std::vector<SymEigenPair> pairs;
  const double l_norm = laplacian.norm();
  const double d_norm = degrees.norm();
  for (Eigen::Index i = 0; i < n && static_cast<Eigen::Index>(pairs.size()) < k; ++i) {
    if (!(lambda_max > 0.0) || values[i] <= threshold) continue;
    SymEigenPair pair;
    pair.value = values[i];
    pair.vector = inv_sqrt.cwiseProduct(solver.eigenvectors().col(i));
    canonicalize(pair.vector);
    const Vector r = laplacian * pair.vector - pair.value * degrees.cwiseProduct(pair.vector);
    pair.residual = r.norm() / (l_norm + std::abs(pair.value) * d_norm);
    pairs.push_back(std::move(pair));
  }
  if (static_cast<Eigen::Index>(pairs.size()) < k) {
    fail(ErrorCode::insufficient_spectrum,
         "sym_gen_eig: requested " + std::to_string(k) + " eigenpairs above the deflation "
         "threshold, found " + std::to_string(pairs.size()));
  }

  // Exactly tied eigenvalues are ordered by their (sign-normalized) vectors.
  const double tie = 1e-12 * std::max(lambda_max, 1e-300);
  std::stable_sort(pairs.begin(), pairs.end(), [tie](const auto& a, const auto& b) {
    if (std::abs(a.value - b.value) > tie) return a.value < b.value;
    return lex_greater(a.vector, b.vector);
  });
  return pairs;
}

double pencil_residual(const Matrix& F, const Matrix& G, std::complex<double> mu,
                       const ComplexVector& w) {
  const ComplexVector r = F.cast<std::complex<double>>() * w - mu * (G.cast<std::complex<double>>() * w);
  return r.norm() / (F.norm() + std::abs(mu) * G.norm());
}

std::vector<EigenPair> rect_pencil_eig(const Matrix& F, const Matrix& G,
                                       const PencilOptions& options) {
  if (F.rows() != G.rows() || F.cols() != G.cols()) {
    fail(ErrorCode::shape_mismatch, "rect_pencil_eig: F and G differ in shape");
  }
  if (F.size() == 0) fail(ErrorCode::invalid_argument, "rect_pencil_eig: empty pencil");
  if (!all_finite(F) || !all_finite(G)) {
    fail(ErrorCode::non_finite, "rect_pencil_eig: non-finite input");
  }
  if (G.isZero(0.0)) {
    fail(ErrorCode::degenerate_pencil, "rect_pencil_eig: G = 0, no finite eigenvalue");
  }

  const Eigen::Index rows = F.rows();
  const Eigen::Index cols = F.cols();

  // Column compression onto the row space of [F; G].
  Matrix stacked(2 * rows, cols);
  stacked << F, G;
  Eigen::BDCSVD<Matrix> col_svd(stacked, Eigen::ComputeThinV);
  const auto& sv = col_svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv[rank] > 1e-12 * sv[0]) ++rank;
  rank = std::min(rank, rows);

  const bool compressed = rank < cols;
  Matrix basis;
  Matrix Fc = F;
  Matrix Gc = G;
  if (compressed) {
    basis = col_svd.matrixV().leftCols(rank);
    Fc = F * basis;
    Gc = G * basis;
  }
  if (Gc.isZero(0.0)) {
    fail(ErrorCode::degenerate_pencil, "rect_pencil_eig: G vanishes on the row space of [F; G]");
  }

  auto lift = [&](const ComplexVector& reduced) -> ComplexVector {
    ComplexVector w = compressed ? ComplexVector(basis.cast<std::complex<double>>() * reduced)
                                 : reduced;
    canonicalize(w);
    return w;
  };

  std::vector<EigenPair> candidates;

  const SquarePencil sq = square_up(Fc, Gc);
  Eigen::GeneralizedEigenSolver<Matrix> qz(sq.lhs, sq.rhs, false);
  if (qz.info() == Eigen::Success) {
    const double scale = sq.rhs.norm() + sq.lhs.norm();
    const auto alphas = qz.alphas();
    const auto betas = qz.betas();
    for (Eigen::Index i = 0; i < betas.size(); ++i) {
      if (std::abs(betas[i]) <= 64.0 * kEps * scale) continue;  // infinite or 0/0
      std::complex<double> mu = alphas[i] / betas[i];
      if (!std::isfinite(mu.real()) || !std::isfinite(mu.imag())) continue;
      if (std::abs(mu.imag()) <= 1e-12 * (1.0 + std::abs(mu.real()))) mu.imag(0.0);

      ComplexVector reduced;
      if (mu.imag() == 0.0) {
        reduced = null_direction(Matrix(sq.lhs - mu.real() * sq.rhs)).cast<std::complex<double>>();
      } else {
        const ComplexMatrix m =
            sq.lhs.cast<std::complex<double>>() - mu * sq.rhs.cast<std::complex<double>>();
        reduced = null_direction(m);
      }
      EigenPair pair;
      pair.value = mu;
      pair.vector = lift(reduced);
      candidates.push_back(std::move(pair));
    }
  }

  if (is_singular_pencil(Fc, Gc)) {
    EigenPair pair;
    pair.value = 1.0;
    pair.vector = lift(null_direction(Matrix(Fc - Gc)).cast<std::complex<double>>());
    candidates.push_back(std::move(pair));
  }

  std::vector<EigenPair> result;
  for (auto& pair : candidates) {
    pair.residual = pencil_residual(F, G, pair.value, pair.vector);
    pair.certified = std::isfinite(pair.residual) && pair.residual <= options.residual_tol;
    if (pair.certified || (options.certification == Certification::report_only &&
                           std::isfinite(pair.residual))) {
      result.push_back(std::move(pair));
    }
  }
  if (result.empty()) {
    fail(ErrorCode::no_eigenpair,
         "rect_pencil_eig: no candidate passed certification (" + std::to_string(candidates.size()) +
             " candidates, tolerance " + std::to_string(options.residual_tol) + ")");
  }

  std::stable_sort(result.begin(), result.end(), [](const EigenPair& a, const EigenPair& b) {
    const double tie = 1e-12 * (1.0 + std::abs(a.value));
    if (std::abs(a.value.real() - b.value.real()) > tie) return a.value.real() < b.value.real();
    if (std::abs(a.value.imag() - b.value.imag()) > tie) return a.value.imag() < b.value.imag();
    return lex_greater(a.vector, b.vector);
  });
  return result;
}

}  // namespace featscale::numkernel
