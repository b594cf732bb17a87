#include "regpath/kernels.hpp"

#include <cassert>
#include <cmath>

namespace regpath::kernels {

namespace {
// Below this many flops the parallel loops are not worth the fork/join.
constexpr std::size_t kParallelCutoff = 1u << 14;
}  // namespace

namespace ref {

void matvec(const Matrix& x, const Vector& beta, Vector& out) {
  assert(beta.size() == x.cols);
  out.assign(x.rows, 0.0);
  for (std::size_t i = 0; i < x.rows; ++i) {
    const double* xi = x.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < x.cols; ++j) s += xi[j] * beta[j];
    out[i] = s;
  }
}

void matvec_t(const Matrix& x, const Vector& w, Vector& out) {
  assert(w.size() == x.rows);
  out.assign(x.cols, 0.0);
  for (std::size_t j = 0; j < x.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) s += x(i, j) * w[i];
    out[j] = s;
  }
}

void matvec_t_masked(const Matrix& x, const Vector& w, const std::vector<std::uint8_t>& mask,
                     Vector& out) {
  assert(w.size() == x.rows);
  assert(mask.size() == x.rows);
  out.assign(x.cols, 0.0);
  for (std::size_t j = 0; j < x.cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i)
      if (mask[i]) s += x(i, j) * w[i];
    out[j] = s;
  }
}

void gram(const Matrix& x, const std::vector<std::size_t>& active,
          const std::vector<std::uint8_t>& mask, double scale, Matrix& out) {
  const std::size_t k = active.size();
  out = Matrix(k, k);
  const bool masked = !mask.empty();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const std::size_t ja = active[a], jb = active[b];
      double s = 0.0;
      for (std::size_t i = 0; i < x.rows; ++i) {
        if (masked && !mask[i]) continue;
        s += x(i, ja) * x(i, jb);
      }
      out(a, b) = scale * s;
      out(b, a) = out(a, b);
    }
  }
}

void matvec_active(const Matrix& x, const std::vector<std::size_t>& active, const Vector& v,
                   Vector& out) {
  assert(v.size() == active.size());
  out.assign(x.rows, 0.0);
  for (std::size_t i = 0; i < x.rows; ++i) {
    const double* xi = x.row(i);
    double s = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) s += xi[active[a]] * v[a];
    out[i] = s;
  }
}

}  // namespace ref

void matvec(const Matrix& x, const Vector& beta, Vector& out) {
  if (x.rows * x.cols < kParallelCutoff) {
    ref::matvec(x, beta, out);
    return;
  }
  assert(beta.size() == x.cols);
  out.assign(x.rows, 0.0);
  const std::int64_t n = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* xi = x.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t j = 0; j < x.cols; ++j) s += xi[j] * beta[j];
    out[static_cast<std::size_t>(i)] = s;
  }
}

void matvec_t(const Matrix& x, const Vector& w, Vector& out) {
  if (x.rows * x.cols < kParallelCutoff) {
    ref::matvec_t(x, w, out);
    return;
  }
  assert(w.size() == x.rows);
  out.assign(x.cols, 0.0);
  const std::int64_t p = static_cast<std::int64_t>(x.cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < p; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) s += x(i, static_cast<std::size_t>(j)) * w[i];
    out[static_cast<std::size_t>(j)] = s;
  }
}

void matvec_t_masked(const Matrix& x, const Vector& w, const std::vector<std::uint8_t>& mask,
                     Vector& out) {
  if (x.rows * x.cols < kParallelCutoff) {
    ref::matvec_t_masked(x, w, mask, out);
    return;
  }
  assert(w.size() == x.rows);
  assert(mask.size() == x.rows);
  out.assign(x.cols, 0.0);
  const std::int64_t p = static_cast<std::int64_t>(x.cols);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < p; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i)
      if (mask[i]) s += x(i, static_cast<std::size_t>(j)) * w[i];
    out[static_cast<std::size_t>(j)] = s;
  }
}

void gram(const Matrix& x, const std::vector<std::size_t>& active,
          const std::vector<std::uint8_t>& mask, double scale, Matrix& out) {
  const std::size_t k = active.size();
  if (x.rows * k * k < kParallelCutoff) {
    ref::gram(x, active, mask, scale, out);
    return;
  }
  out = Matrix(k, k);
  const bool masked = !mask.empty();
  // Flatten the upper triangle so the pairs balance across threads.
  const std::int64_t npairs = static_cast<std::int64_t>(k * (k + 1) / 2);
#pragma omp parallel for schedule(static)
  for (std::int64_t t = 0; t < npairs; ++t) {
    // Invert t -> (a, b), a <= b, row-major over the upper triangle.
    std::size_t a = 0;
    std::size_t rem = static_cast<std::size_t>(t);
    while (rem >= k - a) {
      rem -= k - a;
      ++a;
    }
    const std::size_t b = a + rem;
    const std::size_t ja = active[a], jb = active[b];
    double s = 0.0;
    for (std::size_t i = 0; i < x.rows; ++i) {
      if (masked && !mask[i]) continue;
      s += x(i, ja) * x(i, jb);
    }
    out(a, b) = scale * s;
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < a; ++b) out(a, b) = out(b, a);
}

void matvec_active(const Matrix& x, const std::vector<std::size_t>& active, const Vector& v,
                   Vector& out) {
  if (x.rows * active.size() < kParallelCutoff) {
    ref::matvec_active(x, active, v, out);
    return;
  }
  assert(v.size() == active.size());
  out.assign(x.rows, 0.0);
  const std::int64_t n = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const double* xi = x.row(static_cast<std::size_t>(i));
    double s = 0.0;
    for (std::size_t a = 0; a < active.size(); ++a) s += xi[active[a]] * v[a];
    out[static_cast<std::size_t>(i)] = s;
  }
}

double dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace regpath::kernels
