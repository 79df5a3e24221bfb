#pragma once

#include <cmath>
#include <vector>

#include "stabletool/errors.hpp"

namespace stabletool {

/// Dense row-major square matrix, just enough for the desk-scale solver.
struct DenseMatrix {
  int n = 0;
  std::vector<double> a;  // n*n, row-major

  DenseMatrix() = default;
  explicit DenseMatrix(int size) : n(size), a(size_t(size) * size, 0.0) {}
  double& operator()(int i, int j) { return a[size_t(i) * n + j]; }
  double operator()(int i, int j) const { return a[size_t(i) * n + j]; }

  std::vector<double> multiply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double* row = &a[size_t(i) * n];
      double s = 0;
      for (int j = 0; j < n; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    return y;
  }
};

/// LU factorization with partial pivoting; solves in place.
inline std::vector<double> lu_solve(DenseMatrix A, std::vector<double> b) {
  const int n = A.n;
  if (int(b.size()) != n) throw InvalidParameterError("lu_solve: size mismatch");
  std::vector<int> piv(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    double best = std::abs(A(c, c));
    for (int r = c + 1; r < n; ++r) {
      const double v = std::abs(A(r, c));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (!(best > 0)) throw SingularMatrixError("lu_solve: singular matrix");
    piv[c] = p;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(A(c, j), A(p, j));
      std::swap(b[c], b[p]);
    }
    const double d = A(c, c);
    for (int r = c + 1; r < n; ++r) {
      const double f = A(r, c) / d;
      if (f == 0.0) continue;
      A(r, c) = f;
      double* rr = &A.a[size_t(r) * n];
      const double* cr = &A.a[size_t(c) * n];
      for (int j = c + 1; j < n; ++j) rr[j] -= f * cr[j];
      b[r] -= f * b[c];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    const double* rr = &A.a[size_t(r) * n];
    for (int j = r + 1; j < n; ++j) s -= rr[j] * b[j];
    b[r] = s / rr[r];
  }
  return b;
}

}  // namespace stabletool
