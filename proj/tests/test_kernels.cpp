#include <doctest.h>

#include "regpath/kernels.hpp"
#include "regpath/random.hpp"
#include "test_support.hpp"

using namespace regpath;

namespace {

// Sizes above and below the internal parallel cutoff, so both code paths run.
void check_all_kernels(std::size_t n, std::size_t p) {
  RandomStream rng(7 + n + p);
  Matrix x(n, p);
  for (double& v : x.data) v = rng.next_normal();
  const Vector beta = rng.normals(p);
  const Vector w = rng.normals(n);
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < p; j += 3) active.push_back(j);
  const Vector va = rng.normals(active.size());
  std::vector<std::uint8_t> mask(n, 0);
  for (std::size_t i = 0; i < n; i += 2) mask[i] = 1;

  Vector a, b;
  kernels::ref::matvec(x, beta, a);
  kernels::matvec(x, beta, b);
  CHECK(a == b);

  kernels::ref::matvec_t(x, w, a);
  kernels::matvec_t(x, w, b);
  CHECK(a == b);

  kernels::ref::matvec_t_masked(x, w, mask, a);
  kernels::matvec_t_masked(x, w, mask, b);
  CHECK(a == b);

  kernels::ref::matvec_active(x, active, va, a);
  kernels::matvec_active(x, active, va, b);
  CHECK(a == b);

  Matrix ga, gb;
  kernels::ref::gram(x, active, mask, 2.0, ga);
  kernels::gram(x, active, mask, 2.0, gb);
  CHECK(ga.data == gb.data);
  kernels::ref::gram(x, active, {}, 1.0, ga);
  kernels::gram(x, active, {}, 1.0, gb);
  CHECK(ga.data == gb.data);
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference bitwise") {
  check_all_kernels(11, 7);     // below cutoff
  check_all_kernels(220, 130);  // above cutoff
}

TEST_CASE("matvec against hand-computed values") {
  Matrix x(2, 2);
  x(0, 0) = 1.0;
  x(0, 1) = 2.0;
  x(1, 0) = 3.0;
  x(1, 1) = 4.0;
  Vector out;
  kernels::matvec(x, {1.0, -1.0}, out);
  CHECK(out == Vector{-1.0, -1.0});
  kernels::matvec_t(x, {1.0, 1.0}, out);
  CHECK(out == Vector{4.0, 6.0});
}

TEST_CASE("gram restricted to masked rows") {
  Matrix x(3, 2);
  // rows (1,2), (3,4), (5,6); mask keeps rows 0 and 2
  x(0, 0) = 1;
  x(0, 1) = 2;
  x(1, 0) = 3;
  x(1, 1) = 4;
  x(2, 0) = 5;
  x(2, 1) = 6;
  std::vector<std::uint8_t> mask{1, 0, 1};
  Matrix g;
  kernels::gram(x, {0, 1}, mask, 1.0, g);
  CHECK(g(0, 0) == doctest::Approx(1 + 25));
  CHECK(g(0, 1) == doctest::Approx(2 + 30));
  CHECK(g(1, 0) == g(0, 1));
  CHECK(g(1, 1) == doctest::Approx(4 + 36));
}
