#include "regpath/linalg.hpp"

#include <cmath>
#include <string>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"

namespace regpath {

namespace {
constexpr double kPivotTol = 1e-12;
}

Cholesky Cholesky::factor(const Matrix& a) {
  const std::size_t n = a.rows;
  Cholesky ch;
  ch.l = Matrix(n, n);
  Matrix& l = ch.l;
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (d <= kPivotTol)
      throw NotPositiveDefinite("cholesky: pivot " + std::to_string(d) + " at column " +
                                std::to_string(j));
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / l(j, j);
    }
  }
  return ch;
}

Vector Cholesky::solve(const Vector& b) const {
  const std::size_t n = l.rows;
  // forward substitution, L z = b
  Vector z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * z[k];
    z[i] = s / l(i, i);
  }
  // back substitution, L^T x = z
  Vector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double s = z[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
    x[ii] = s / l(ii, ii);
  }
  return x;
}

Vector solve_spd(const Matrix& a, const Vector& b) {
  if (a.rows != a.cols) throw DimensionMismatch("solve_spd: matrix is not square");
  if (a.rows != b.size()) throw DimensionMismatch("solve_spd: dimension of b does not match A");
  double maxabs = 0.0;
  for (double v : a.data) maxabs = std::max(maxabs, std::fabs(v));
  const double sym_tol = 1e-10 * std::max(1.0, maxabs);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = i + 1; j < a.cols; ++j)
      if (std::fabs(a(i, j) - a(j, i)) > sym_tol)
        throw DimensionMismatch("solve_spd: matrix is not symmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
  return Cholesky::factor(a).solve(b);
}

Vector least_squares(const Matrix& x, const Vector& y) {
  if (x.rows < x.cols) throw RankDeficient("least_squares: fewer rows than columns");
  if (x.rows != y.size()) throw DimensionMismatch("least_squares: length of y does not match X");
  std::vector<std::size_t> all(x.cols);
  for (std::size_t j = 0; j < x.cols; ++j) all[j] = j;
  Matrix gram;
  kernels::gram(x, all, {}, 1.0, gram);
  Vector rhs;
  kernels::matvec_t(x, y, rhs);
  try {
    return Cholesky::factor(gram).solve(rhs);
  } catch (const NotPositiveDefinite& e) {
    throw RankDeficient(std::string("least_squares: effective rank below column count (") +
                        e.what() + ")");
  }
}

}  // namespace regpath
