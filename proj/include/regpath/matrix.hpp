#pragma once

#include <cstddef>
#include <vector>

namespace regpath {

using Vector = std::vector<double>;

/// Dense row-major matrix. The only storage type the solvers use.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major, rows*cols entries

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  const double* row(std::size_t i) const { return data.data() + i * cols; }
  double* row(std::size_t i) { return data.data() + i * cols; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

bool all_finite(const Vector& v);
bool all_finite(const Matrix& m);

double linf_norm(const Vector& v);
double l1_norm(const Vector& v);
double l2_norm(const Vector& v);

}  // namespace regpath
