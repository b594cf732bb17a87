#pragma once

#include <cstdint>
#include <vector>

#include "regpath/matrix.hpp"

// Dense kernels behind every solver. Each output element is accumulated
// serially by a single thread, so the OpenMP versions are bitwise identical
// to the serial reference for any thread count. The `ref` namespace keeps
// the plain-loop implementations; tests compare the two, the benchmark
// times them.

namespace regpath::kernels {

namespace ref {

// f = X * beta  (length rows)
void matvec(const Matrix& x, const Vector& beta, Vector& out);

// g = X^T * w   (length cols)
void matvec_t(const Matrix& x, const Vector& w, Vector& out);

// g = X^T * (w masked to rows with mask[i] != 0)
void matvec_t_masked(const Matrix& x, const Vector& w, const std::vector<std::uint8_t>& mask,
                     Vector& out);

// G = scale * X_A^T X_A restricted to rows with mask[i] != 0 (empty mask = all rows).
// Exactly symmetric: upper triangle computed, then mirrored.
void gram(const Matrix& x, const std::vector<std::size_t>& active,
          const std::vector<std::uint8_t>& mask, double scale, Matrix& out);

// u = X_A * v_A where v holds one entry per active column (length rows)
void matvec_active(const Matrix& x, const std::vector<std::size_t>& active, const Vector& v,
                   Vector& out);

}  // namespace ref

void matvec(const Matrix& x, const Vector& beta, Vector& out);
void matvec_t(const Matrix& x, const Vector& w, Vector& out);
void matvec_t_masked(const Matrix& x, const Vector& w, const std::vector<std::uint8_t>& mask,
                     Vector& out);
void gram(const Matrix& x, const std::vector<std::size_t>& active,
          const std::vector<std::uint8_t>& mask, double scale, Matrix& out);
void matvec_active(const Matrix& x, const std::vector<std::size_t>& active, const Vector& v,
                   Vector& out);

double dot(const Vector& a, const Vector& b);

}  // namespace regpath::kernels
