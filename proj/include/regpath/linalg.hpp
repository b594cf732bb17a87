#pragma once

#include "regpath/matrix.hpp"

namespace regpath {

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
/// Factored from scratch on every call; no updating or downdating.
struct Cholesky {
  Matrix l;

  /// Throws NotPositiveDefinite when a pivot falls at or below 1e-12.
  static Cholesky factor(const Matrix& a);

  Vector solve(const Vector& b) const;
};

/// Solve A x = b for symmetric positive definite A.
/// A must be square, symmetric within 1e-10 (relative to its largest entry),
/// with dimension matching b.
Vector solve_spd(const Matrix& a, const Vector& b);

/// Least squares via the normal equations. Requires rows >= cols and full
/// column rank; throws RankDeficient when the X^T X pivot check fails.
Vector least_squares(const Matrix& x, const Vector& y);

}  // namespace regpath
