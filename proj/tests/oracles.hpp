#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these share code with the library under test.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

/// Cyclic Jacobi rotations on a symmetric matrix; returns ascending eigenvalues.
inline std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, int sweeps = 100) {
  const Eigen::Index n = a.rows();
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30 * std::max(1.0, a.squaredNorm())) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

/// Eigenvalues of L x = lambda D x via the whitened symmetric form.
inline std::vector<double> generalized_eigenvalues(const Eigen::MatrixXd& L, const Eigen::VectorXd& d) {
  const Eigen::VectorXd w = d.cwiseSqrt().cwiseInverse();
  return jacobi_eigenvalues(w.asDiagonal() * L * w.asDiagonal());
}

using Poly = std::vector<std::complex<double>>;  // coefficient k multiplies mu^k

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// det(F - mu G) by Leibniz expansion (n <= 6).
inline Poly characteristic_polynomial(const Eigen::MatrixXd& F, const Eigen::MatrixXd& G) {
  const int n = static_cast<int>(F.rows());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(static_cast<std::size_t>(n) + 1, 0.0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Poly term{inversions % 2 == 0 ? 1.0 : -1.0};
    for (int i = 0; i < n; ++i) term = poly_mul(term, {F(i, perm[i]), -G(i, perm[i])});
    for (std::size_t k = 0; k < term.size(); ++k) det[k] += term[k];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Durand-Kerner roots of a polynomial with nonzero leading coefficient.
inline std::vector<std::complex<double>> polynomial_roots(Poly p) {
  while (p.size() > 1 && std::abs(p.back()) < 1e-14) p.pop_back();
  const std::size_t deg = p.size() - 1;
  const std::complex<double> lead = p.back();
  for (auto& c : p) c /= lead;
  auto eval = [&](std::complex<double> x) {
    std::complex<double> y = 0.0;
    for (std::size_t k = p.size(); k-- > 0;) y = y * x + p[k];
    return y;
  };
  std::vector<std::complex<double>> roots(deg);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = std::pow(seed, static_cast<double>(i));
  for (int iter = 0; iter < 5000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const std::complex<double> step = eval(roots[i]) / denom;
      roots[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15) break;
  }
  // Polish each root with Newton on the original polynomial.
  for (auto& r : roots) {
    for (int it = 0; it < 20; ++it) {
      std::complex<double> y = 0.0, dy = 0.0;
      for (std::size_t k = p.size(); k-- > 0;) {
        dy = dy * r + y;
        y = y * r + p[k];
      }
      if (std::abs(dy) == 0.0) break;
      r -= y / dy;
    }
  }
  return roots;
}

/// Minimum within-cluster sum of squares over every partition into k
/// nonempty clusters (k^n enumeration, n <= 8).
inline double kmeans_optimum(const Eigen::MatrixXd& pts, int k) {
  const int n = static_cast<int>(pts.rows());
  std::vector<int> assign(static_cast<std::size_t>(n), 0);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (int a : assign) ++count[static_cast<std::size_t>(a)];
    if (std::all_of(count.begin(), count.end(), [](int c) { return c > 0; })) {
      double total = 0.0;
      for (int c = 0; c < k; ++c) {
        Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(pts.cols());
        for (int i = 0; i < n; ++i)
          if (assign[static_cast<std::size_t>(i)] == c) mean += pts.row(i);
        mean /= count[static_cast<std::size_t>(c)];
        for (int i = 0; i < n; ++i)
          if (assign[static_cast<std::size_t>(i)] == c) total += (pts.row(i) - mean).squaredNorm();
      }
      best = std::min(best, total);
    }
    int pos = 0;
    while (pos < n && ++assign[static_cast<std::size_t>(pos)] == k) assign[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return best;
}

inline double entropy(const std::vector<double>& counts, double n) {
  double h = 0.0;
  for (double c : counts)
    if (c > 0) h -= c / n * std::log(c / n);
  return h;
}

/// NMI through I(X;Y) = H(X) + H(Y) - H(X,Y); labels in {1, 2}.
inline double nmi_entropy(const std::vector<int>& t, const std::vector<int>& p) {
  const double n = static_cast<double>(t.size());
  std::vector<double> ct(3, 0.0), cp(3, 0.0), joint(9, 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    ct[static_cast<std::size_t>(t[i])] += 1;
    cp[static_cast<std::size_t>(p[i])] += 1;
    joint[static_cast<std::size_t>(t[i] * 3 + p[i])] += 1;
  }
  const double hx = entropy(ct, n), hy = entropy(cp, n);
  if (hx == 0.0 || hy == 0.0) return 0.0;
  return (hx + hy - entropy(joint, n)) / std::sqrt(hx * hy);
}

inline double accuracy(const std::vector<int>& t, const std::vector<int>& p) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < t.size(); ++i) hits += t[i] == p[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(t.size());
}

inline std::vector<int> nearest_neighbor(const Eigen::MatrixXd& e, const std::vector<Eigen::Index>& train,
                                         const std::vector<int>& labels, const std::vector<Eigen::Index>& test) {
  std::vector<int> out;
  for (Eigen::Index q : test) {
    double best = std::numeric_limits<double>::infinity();
    int label = 0;
    for (std::size_t j = 0; j < train.size(); ++j) {
      const double d = (e.row(q) - e.row(train[j])).squaredNorm();
      if (d < best) {
        best = d;
        label = labels[j];
      }
    }
    out.push_back(label);
  }
  return out;
}

}  // namespace oracle
