#include <doctest.h>

#include <cmath>

#include "regpath/errors.hpp"
#include "regpath/loss.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"
#include "test_support.hpp"

using namespace regpath;

namespace {

void check_breakpoint_kkt(const Dataset& ds, const PiecewisePath& path, double tol_scale = 1e-6) {
  for (std::size_t k = 0; k < path.breakpoint_count(); ++k) {
    const double lam = path.lambdas[k];
    CHECK(kkt_residual(ds, path.loss, lam, path.betas[k]) <= tol_scale * (1.0 + lam));
  }
}

double max_abs_y(const Dataset& ds) {
  double m = 0.0;
  for (double v : ds.y) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace

TEST_CASE("huge knot reduces the Huberized path to the Lasso path") {
  for (std::uint64_t seed : {21u, 22u, 23u}) {
    const Dataset ds = testing::random_regression(seed, 25, 8);
    const double delta = 1000.0 * (max_abs_y(ds) + 1.0);
    const PiecewisePath lasso = lasso_path(ds);
    const PiecewisePath huber = huberized_lasso_path(ds, delta);

    REQUIRE(huber.breakpoint_count() == lasso.breakpoint_count());
    for (std::size_t k = 0; k < lasso.breakpoint_count(); ++k) {
      CHECK(std::fabs(huber.lambdas[k] - lasso.lambdas[k]) <= 1e-8 * (1.0 + lasso.lambdas[k]));
      CHECK(testing::max_abs_diff(huber.betas[k], lasso.betas[k]) <= 1e-8);
      CHECK(huber.events[k] == lasso.events[k]);
    }
    CHECK(huber.status == PathStatus::complete);
  }
}

TEST_CASE("regime changes appear and KKT holds at every breakpoint") {
  // Small noise plus two gross outliers: the path must cross the knot.
  Dataset ds = testing::random_regression(31, 40, 5, 2, 0.3);
  ds.y[3] += 25.0;
  ds.y[17] -= 30.0;
  const double delta = 1.0;
  const PiecewisePath path = huberized_lasso_path(ds, delta);
  CHECK(path.status == PathStatus::complete);

  bool saw_regime = false;
  for (const auto& ev : path.events)
    if (ev.kind == PathEventKind::regime_change) saw_regime = true;
  CHECK(saw_regime);
  check_breakpoint_kkt(ds, path);

  // residual regime flags are consistent with the solution at breakpoints:
  // for the quadratic zone the pseudo-residual equals the residual, which
  // is exactly what the KKT residual above verifies through the loss.
  for (std::size_t k = 0; k + 1 < path.breakpoint_count(); ++k)
    CHECK(path.lambdas[k] > path.lambdas[k + 1]);
}

TEST_CASE("huber path matches the proximal oracle at interior penalties") {
  Dataset ds = testing::random_regression(77, 30, 6, 3, 0.5);
  ds.y[0] += 12.0;
  ds.y[9] -= 8.0;
  const PiecewisePath path = huberized_lasso_path(ds, 1.0);
  REQUIRE(path.status == PathStatus::complete);

  OracleConfig cfg;
  cfg.kkt_tol = 1e-10;
  Vector warm(ds.p(), 0.0);
  for (int k = 1; k <= 12; ++k) {
    const double lam = path.lambdas[0] * (1.0 - k / 12.5);
    if (lam <= 0.0) continue;
    const SolveResult r = solve_l1(ds, Loss::huber(1.0), lam, cfg, &warm);
    REQUIRE(r.status == SolveStatus::converged);
    warm = r.beta;
    CHECK(testing::max_abs_diff(evaluate_path(path, lam), r.beta) <= 1e-4);
  }
}

TEST_CASE("single observation beyond the knot: structure changes at the entry threshold") {
  // X = (1), y = (3), delta = 1: the gradient is constant -2 delta below the
  // knot, so beta = 0 stays stationary down to lambda = 2 delta and the
  // solution is non-unique there; the endpoint comes from the fixed-point
  // solver.
  Dataset ds;
  ds.task = Task::regression;
  ds.x = Matrix(1, 1);
  ds.x(0, 0) = 1.0;
  ds.y = {3.0};
  const PiecewisePath path = huberized_lasso_path(ds, 1.0);

  CHECK(path.lambda_start() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(path.status == PathStatus::degenerate_finish);
  REQUIRE(path.breakpoint_count() == 2);
  // unpenalized fit: residual at the knot, beta ~ 3 - lambda/2 with lambda ~ 0
  CHECK(path.betas.back()[0] == doctest::Approx(3.0).epsilon(1e-6));
  check_breakpoint_kkt(ds, path, 1e-6);
}

TEST_CASE("thin quadratic zone reports a degenerate finish with a valid endpoint") {
  // p > n with a small knot: once the zone cannot support the active set the
  // exact path must stop and the reported endpoint must still satisfy KKT.
  const Dataset ds = testing::random_regression(55, 4, 9, 3, 2.0);
  const PiecewisePath path = huberized_lasso_path(ds, 0.05);
  CHECK((path.status == PathStatus::degenerate_finish ||
         path.status == PathStatus::halted_degenerate));
  CHECK_FALSE(path.diagnostic.empty());
  if (path.status == PathStatus::degenerate_finish) {
    const double lam_f = path.lambda_end();
    CHECK(lam_f <= 1e-10 * path.lambda_start());
    CHECK(kkt_residual(ds, path.loss, lam_f, path.betas.back()) <= 1e-6);
  }
}

TEST_CASE("parameter validation") {
  const Dataset ds = testing::random_regression(1, 10, 3);
  CHECK_THROWS_AS(huberized_lasso_path(ds, 0.0), OutOfRange);
  CHECK_THROWS_AS(huberized_lasso_path(ds, -1.0), OutOfRange);

  Dataset binary;
  binary.task = Task::binary;
  binary.x = Matrix::identity(2);
  binary.y = {1.0, -1.0};
  CHECK_THROWS_AS(huberized_lasso_path(binary, 1.0), InvalidLabel);
}
