#include <doctest.h>

#include <cmath>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"
#include "regpath/linalg.hpp"
#include "regpath/loss.hpp"
#include "regpath/prox.hpp"
#include "test_support.hpp"

using namespace regpath;

TEST_CASE("penalties at or above the entry threshold give the zero solution") {
  const Dataset ds = testing::random_regression(9, 20, 6);
  const double lm = lambda_max(ds, Loss::squared());
  for (double factor : {1.0, 1.1, 2.0}) {
    const SolveResult r = solve_l1(ds, Loss::squared(), lm * factor);
    CHECK(r.status == SolveStatus::converged);
    CHECK(linf_norm(r.beta) == 0.0);
    CHECK(r.iterations == 0);
  }
}

TEST_CASE("unpenalized squared loss matches least squares") {
  const Dataset ds = testing::random_regression(14, 25, 6);
  const Vector ls = least_squares(ds.x, ds.y);
  const SolveResult r = solve_l1(ds, Loss::squared(), 0.0);
  REQUIRE(r.status == SolveStatus::converged);
  CHECK(testing::max_abs_diff(r.beta, ls) <= 1e-6);
}

TEST_CASE("orthonormal designs recover the closed-form soft threshold") {
  const Matrix q = testing::random_orthonormal(8, 30, 6);
  Dataset ds;
  ds.task = Task::regression;
  ds.x = q;
  RandomStream rng(2);
  ds.y = rng.normals(30);
  for (double& v : ds.y) v *= 2.5;

  Vector c;
  kernels::matvec_t(ds.x, ds.y, c);
  for (double lambda : {0.5, 1.5, 4.0}) {
    const SolveResult r = solve_l1(ds, Loss::squared(), lambda);
    REQUIRE(r.status == SolveStatus::converged);
    for (std::size_t j = 0; j < ds.p(); ++j) {
      const double mag = std::fabs(c[j]) - lambda / 2.0;
      const double expected = (mag > 0.0) ? (c[j] > 0 ? mag : -mag) : 0.0;
      CHECK(std::fabs(r.beta[j] - expected) <= 1e-7);
    }
  }
}

TEST_CASE("objective never increases across accepted iterations") {
  for (const Loss& loss : {Loss::squared(), Loss::huber(0.8), Loss::binomial_deviance()}) {
    const Dataset ds = loss.margin_based() ? testing::random_binary(33, 40, 5)
                                           : testing::random_regression(33, 40, 5);
    OracleConfig cfg;
    cfg.track_objective = true;
    const double lam = 0.05 * lambda_max(ds, loss);
    const SolveResult r = solve_l1(ds, loss, lam, cfg);
    REQUIRE(r.status == SolveStatus::converged);
    REQUIRE(r.objective_trace.size() >= 2);
    for (std::size_t t = 1; t < r.objective_trace.size(); ++t)
      CHECK(r.objective_trace[t] <=
            r.objective_trace[t - 1] + 1e-10 * (1.0 + std::fabs(r.objective_trace[t - 1])));
    CHECK(r.kkt <= cfg.kkt_tol);
  }
}

TEST_CASE("KKT residual meets the tolerance for every loss") {
  for (const Loss& loss :
       {Loss::squared(), Loss::huber(1.0), Loss::exponential(), Loss::binomial_deviance()}) {
    const Dataset ds = loss.margin_based() ? testing::random_binary(71, 60, 4)
                                           : testing::random_regression(71, 60, 4);
    const double lm = lambda_max(ds, loss);
    for (double factor : {0.5, 0.1, 0.01}) {
      const SolveResult r = solve_l1(ds, loss, lm * factor);
      REQUIRE(r.status == SolveStatus::converged);
      CHECK(r.kkt <= 1e-8);
      CHECK(kkt_residual(ds, loss, lm * factor, r.beta) <= 1e-8);
    }
  }
}

TEST_CASE("hinge loss is rejected") {
  const Dataset ds = testing::random_binary(4, 10, 3);
  CHECK_THROWS_AS(solve_l1(ds, Loss::hinge(), 1.0), OutOfRange);
}

TEST_CASE("grid: single point equals solve_l1 and all-zero above the threshold") {
  const Dataset ds = testing::random_regression(26, 20, 5);
  const double lm = lambda_max(ds, Loss::squared());

  const GridPath single = solve_grid(ds, Loss::squared(), {lm * 0.4});
  const SolveResult direct = solve_l1(ds, Loss::squared(), lm * 0.4);
  CHECK(single.betas[0] == direct.beta);

  const GridPath zeros = solve_grid(ds, Loss::squared(), {lm * 1.1, lm * 1.05});
  CHECK(linf_norm(zeros.betas[0]) == 0.0);
  CHECK(linf_norm(zeros.betas[1]) == 0.0);

  CHECK_THROWS_AS(solve_grid(ds, Loss::squared(), {1.0, 2.0}), OutOfRange);  // not decreasing
  CHECK_THROWS_AS(solve_grid(ds, Loss::squared(), {}), OutOfRange);
}

TEST_CASE("warm-started solutions get closer as the grid is refined") {
  const Dataset ds = testing::random_regression(61, 30, 8);
  const double lm = lambda_max(ds, Loss::squared());

  double prev_max_gap = std::numeric_limits<double>::infinity();
  for (std::size_t count : {11u, 21u, 41u}) {
    const GridPath grid = solve_grid(ds, Loss::squared(), log_spaced(lm, lm * 1e-2, count));
    double max_gap = 0.0;
    for (std::size_t k = 1; k < grid.betas.size(); ++k)
      max_gap = std::max(max_gap, testing::max_abs_diff(grid.betas[k], grid.betas[k - 1]));
    CHECK(max_gap < prev_max_gap);
    prev_max_gap = max_gap;
  }
}

TEST_CASE("log_spaced endpoints are exact") {
  const Vector g = log_spaced(6.0, 0.006, 25);
  CHECK(g.size() == 25);
  CHECK(g.front() == 6.0);
  CHECK(g.back() == 0.006);
  for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k] < g[k - 1]);
}
