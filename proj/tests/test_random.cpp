#include <doctest.h>

#include <cmath>

#include "regpath/random.hpp"

using namespace regpath;

TEST_CASE("equal seeds give bit-identical sequences") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_normal() == b.next_normal());

  RandomStream c(42), d(43);
  bool all_equal = true;
  for (int i = 0; i < 100; ++i) all_equal = all_equal && (c.next_normal() == d.next_normal());
  CHECK_FALSE(all_equal);
}

TEST_CASE("uniform draws stay inside (0, 1)") {
  RandomStream rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("normal draws pass the Monte Carlo moment checks") {
  RandomStream rng(2024);
  const std::size_t count = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double z = rng.next_normal();
    sum += z;
    sumsq += z * z;
  }
  const double mean = sum / count;
  const double var = sumsq / count - mean * mean;
  CHECK(mean > -0.02);
  CHECK(mean < 0.02);
  CHECK(var > 0.98);
  CHECK(var < 1.02);
}
