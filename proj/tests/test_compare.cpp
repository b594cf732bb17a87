#include <doctest.h>

#include <cmath>

#include "regpath/compare.hpp"
#include "regpath/errors.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"
#include "test_support.hpp"

using namespace regpath;

TEST_CASE("identical lists have zero discrepancy") {
  AxisPoints pts;
  for (int k = 0; k < 5; ++k) pts.emplace_back(0.5 * k, Vector{0.1 * k, 1.0 - 0.1 * k});
  const DiscrepancyReport r = compare_by_norm(pts, pts);
  CHECK(r.sup == 0.0);
  CHECK(r.mean == 0.0);
  CHECK(r.matched_points == 5);
}

TEST_CASE("a constant displacement in one coordinate is measured exactly") {
  AxisPoints a, b;
  for (int k = 0; k < 6; ++k) {
    const Vector beta{0.2 * k, -0.3 * k, 0.05 * k};
    a.emplace_back(1.0 * k, beta);
    Vector shifted = beta;
    shifted[1] += 0.25;
    b.emplace_back(1.0 * k, shifted);
  }
  const DiscrepancyReport r = compare_by_norm(a, b);
  CHECK(r.sup == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.mean == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.per_coordinate_max[0] == 0.0);
  CHECK(r.per_coordinate_max[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(r.per_coordinate_max[2] == 0.0);
}

TEST_CASE("disjoint ranges raise EmptyOverlap") {
  AxisPoints a{{0.0, {0.0}}, {1.0, {1.0}}};
  AxisPoints b{{5.0, {5.0}}, {6.0, {6.0}}};
  CHECK_THROWS_AS(compare_by_norm(a, b), EmptyOverlap);
  CHECK_THROWS_AS(compare_by_norm(AxisPoints{}, b), OutOfRange);
}

TEST_CASE("points outside the other range are skipped, not extrapolated") {
  AxisPoints a{{0.0, {0.0}}, {1.0, {1.0}}, {9.0, {9.0}}};
  AxisPoints b{{0.0, {0.0}}, {2.0, {2.0}}};
  const DiscrepancyReport r = compare_along_axis(a, b, "l1norm");
  CHECK(r.matched_points == 2);
  CHECK(r.sup == 0.0);
}

TEST_CASE("interpolation between bracketing points is linear") {
  AxisPoints b{{0.0, {0.0, 10.0}}, {2.0, {4.0, 14.0}}};
  AxisPoints a{{0.5, {1.0, 11.0}}};
  const DiscrepancyReport r = compare_along_axis(a, b, "l1norm");
  CHECK(r.sup == doctest::Approx(0.0).epsilon(1e-14));  // (1, 11) lies on the chord
}

TEST_CASE("swapping dense grids changes the outcome only marginally") {
  // Two samplings of the same piecewise-linear path: the comparison should
  // be near-symmetric when both grids are fine.
  const Dataset ds = testing::random_regression(17, 25, 6);
  const PiecewisePath path = lasso_path(ds);
  const double lam0 = path.lambda_start();

  auto sample = [&](std::size_t count) {
    AxisPoints pts;
    for (std::size_t k = 0; k < count; ++k) {
      const double lam = lam0 * (1.0 - static_cast<double>(k) / (count - 1));
      const Vector beta = evaluate_path(path, std::max(lam, 0.0));
      pts.emplace_back(l1_norm(beta), beta);
    }
    return pts;
  };
  const AxisPoints fine = sample(200);
  const AxisPoints finer = sample(401);
  const DiscrepancyReport ab = compare_by_norm(fine, finer);
  const DiscrepancyReport ba = compare_by_norm(finer, fine);
  // coefficients move at most one norm unit per norm unit, so the error is
  // bounded by the coarser inter-point gap
  const double gap = fine.back().first / 199.0;
  CHECK(ab.sup <= gap);
  CHECK(ba.sup <= gap);
  CHECK(std::fabs(ab.sup - ba.sup) <= gap);
}
