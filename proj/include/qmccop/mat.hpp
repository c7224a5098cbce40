#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "qmccop/common.hpp"

namespace qmccop {

// Small dense square matrix, row-major. Dimensions here are copula
// dimensions (d <= a few dozen), so no BLAS is needed.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

 private:
  int n_ = 0;
  std::vector<double> a_;
};

// Lower-triangular Cholesky factor, throws NumericalError on non-PD input.
inline Matrix cholesky_lower(const Matrix& m) {
  const int n = m.size();
  Matrix l(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = m(i, j);
      for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0) throw NumericalError("cholesky: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  return l;
}

// Solve L y = b using the leading m x m block of the lower factor.
inline void forward_solve(const Matrix& l, const double* b, double* y, int m) {
  for (int i = 0; i < m; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
    y[i] = s / l(i, i);
  }
}

inline double logdet_from_cholesky(const Matrix& l, int m) {
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += std::log(l(i, i));
  return 2.0 * s;
}

// Inverse of an SPD matrix via its Cholesky factor (test/diagnostic use).
inline Matrix inverse_spd(const Matrix& m) {
  const int n = m.size();
  Matrix l = cholesky_lower(m);
  // invert L in place into linv
  Matrix linv(n);
  for (int j = 0; j < n; ++j) {
    linv(j, j) = 1.0 / l(j, j);
    for (int i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (int k = j; k < i; ++k) s -= l(i, k) * linv(k, j);
      linv(i, j) = s / l(i, i);
    }
  }
  Matrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      double s = 0.0;
      for (int k = i; k < n; ++k) s += linv(k, i) * linv(k, j);
      inv(i, j) = inv(j, i) = s;
    }
  return inv;
}

inline Matrix exchangeable_correlation(int d, double rho) {
  if (d < 1) throw ConfigError("correlation: dimension must be >= 1");
  if (rho <= -1.0 / std::max(1, d - 1) || rho >= 1.0)
    throw ConfigError("correlation: exchangeable rho out of positive-definite range");
  Matrix p(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i, j) = (i == j) ? 1.0 : rho;
  return p;
}

// Symmetric, unit diagonal, positive definite; returns the Cholesky factor.
inline Matrix validate_correlation(const Matrix& p) {
  const int d = p.size();
  for (int i = 0; i < d; ++i) {
    if (std::abs(p(i, i) - 1.0) > 1e-12) throw ConfigError("correlation: diagonal must be 1");
    for (int j = 0; j < i; ++j)
      if (std::abs(p(i, j) - p(j, i)) > 1e-12) throw ConfigError("correlation: matrix not symmetric");
  }
  return cholesky_lower(p);
}

}  // namespace qmccop
