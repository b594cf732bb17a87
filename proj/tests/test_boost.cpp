#include <doctest.h>

#include <cmath>

#include "regpath/boosting.hpp"
#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"
#include "regpath/loss.hpp"
#include "test_support.hpp"

using namespace regpath;

namespace {

Dataset identity_dataset() {
  Dataset ds;
  ds.task = Task::regression;
  ds.x = Matrix::identity(2);
  ds.y = {3.0, 1.0};
  return ds;
}

}  // namespace

TEST_CASE("first step follows the hand execution") {
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.1;
  cfg.steps = 1;
  cfg.thin = 1;
  const BoostTrace trace = boost(identity_dataset(), cfg);
  // gradient at zero is (-6, -2): coordinate 1 moves by +epsilon
  REQUIRE(trace.records.size() == 2);
  CHECK(trace.records[1].coordinate == 0);
  CHECK(trace.records[1].beta == Vector{0.1, 0.0});
}

TEST_CASE("zero steps returns the zero iterate") {
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.1;
  cfg.steps = 0;
  const BoostTrace trace = boost(identity_dataset(), cfg);
  REQUIRE(trace.records.size() == 1);
  CHECK(trace.records[0].beta == Vector{0.0, 0.0});
  CHECK(trace.iterations_run == 0);
}

TEST_CASE("forty stagewise steps reach the least-squares corner within epsilon") {
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.1;
  cfg.steps = 40;
  cfg.thin = 1;
  const BoostTrace trace = boost(identity_dataset(), cfg);
  const Vector& final = trace.records.back().beta;
  CHECK(std::fabs(final[0] - 3.0) <= 0.1 + 1e-12);
  CHECK(std::fabs(final[1] - 1.0) <= 0.1 + 1e-12);
  for (std::size_t k = 1; k < trace.records.size(); ++k)
    CHECK(trace.records[k].total_loss <= trace.records[k - 1].total_loss + 1e-12);
}

TEST_CASE("the paper configuration runs to completion on five features") {
  const Dataset ds = testing::random_binary(12, 60, 5);
  BoostConfig cfg;
  cfg.loss = Loss::binomial_deviance();
  cfg.epsilon = 0.003;
  cfg.steps = 7000;
  const BoostTrace trace = boost(ds, cfg);
  CHECK(trace.iterations_run == 7000);
  CHECK(trace.records.back().iteration == 7000);
  CHECK(trace.config.effective_thin() == 7);
}

TEST_CASE("every raw iteration changes exactly one coordinate by epsilon") {
  for (const Loss& loss : {Loss::squared(), Loss::huber(0.6), Loss::hinge(), Loss::exponential(),
                           Loss::binomial_deviance()}) {
    const Dataset ds = loss.margin_based() ? testing::random_binary(81, 25, 6)
                                           : testing::random_regression(81, 25, 6);
    BoostConfig cfg;
    cfg.loss = loss;
    cfg.epsilon = 0.01;
    cfg.steps = 200;
    cfg.thin = 1;
    const BoostTrace trace = boost(ds, cfg);
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
      const Vector& prev = trace.records[k - 1].beta;
      const Vector& cur = trace.records[k].beta;
      std::size_t changed = 0;
      for (std::size_t j = 0; j < ds.p(); ++j) {
        if (cur[j] != prev[j]) {
          ++changed;
          CHECK(std::fabs(std::fabs(cur[j] - prev[j]) - cfg.epsilon) <= 1e-15);
          CHECK(trace.records[k].coordinate == j);
        }
      }
      CHECK(changed == 1);
      CHECK(std::fabs(trace.records[k].l1 - l1_norm(cur)) == 0.0);
    }
  }
}

TEST_CASE("squared-loss selection maximizes the absolute correlation with the residual") {
  const Dataset ds = testing::random_regression(19, 30, 7);
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.05;
  cfg.steps = 120;
  cfg.thin = 1;
  const BoostTrace trace = boost(ds, cfg);
  for (std::size_t k = 1; k < trace.records.size(); ++k) {
    const Vector& prev = trace.records[k - 1].beta;
    Vector fit, corr(ds.p(), 0.0);
    kernels::matvec(ds.x, prev, fit);
    for (std::size_t j = 0; j < ds.p(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < ds.n(); ++i) s += ds.x(i, j) * (ds.y[i] - fit[i]);
      corr[j] = std::fabs(s);
    }
    const std::size_t chosen = trace.records[k].coordinate;
    for (std::size_t j = 0; j < ds.p(); ++j) CHECK(corr[chosen] >= corr[j] - 1e-12);
  }
}

TEST_CASE("exponential-loss gradient matches the AdaBoost weighting") {
  const Dataset ds = testing::random_binary(27, 20, 4);
  RandomStream rng(5);
  const Vector beta = rng.normals(4);
  const Vector g = gradient_beta(ds, Loss::exponential(), beta);
  Vector fit;
  kernels::matvec(ds.x, beta, fit);
  for (std::size_t j = 0; j < ds.p(); ++j) {
    double direct = 0.0;
    for (std::size_t i = 0; i < ds.n(); ++i)
      direct -= ds.y[i] * ds.x(i, j) * std::exp(-ds.y[i] * fit[i]);
    CHECK(g[j] == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("identical inputs give identical traces") {
  const Dataset ds = testing::random_binary(3, 40, 5);
  BoostConfig cfg;
  cfg.loss = Loss::exponential();
  cfg.epsilon = 0.02;
  cfg.steps = 300;
  const BoostTrace a = boost(ds, cfg);
  const BoostTrace b = boost(ds, cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    CHECK(a.records[k].beta == b.records[k].beta);
    CHECK(a.records[k].total_loss == b.records[k].total_loss);
  }
}

TEST_CASE("a stationary start stops immediately and is recorded") {
  Dataset ds;
  ds.task = Task::regression;
  ds.x = Matrix::identity(2);
  ds.y = {0.0, 0.0};
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.1;
  cfg.steps = 50;
  const BoostTrace trace = boost(ds, cfg);
  CHECK(trace.stopped_at_stationary);
  CHECK(trace.iterations_run == 0);
  CHECK(trace.records.back().beta == Vector{0.0, 0.0});
}

TEST_CASE("trace_at_norm picks the nearest recorded iterate") {
  const Dataset ds = identity_dataset();
  BoostConfig cfg;
  cfg.loss = Loss::squared();
  cfg.epsilon = 0.1;
  cfg.steps = 30;
  cfg.thin = 1;
  const BoostTrace trace = boost(ds, cfg);

  CHECK(trace_at_norm(trace, 0.0) == Vector{0.0, 0.0});
  const double last_norm = trace.records.back().l1;
  CHECK(trace_at_norm(trace, last_norm) == trace.records.back().beta);

  // norms grow by epsilon per step here, so any target is within epsilon
  for (double s : {0.55, 1.23, 2.0}) {
    const Vector& picked = trace_at_norm(trace, s);
    CHECK(std::fabs(l1_norm(picked) - s) <= cfg.epsilon / 2 + 1e-12);
  }
  CHECK_THROWS_AS(trace_at_norm(trace, last_norm + 1.0), OutOfRange);
  CHECK_THROWS_AS(trace_at_norm(trace, -0.5), OutOfRange);
}

TEST_CASE("margin losses demand binary data and positive epsilon") {
  const Dataset reg = testing::random_regression(2, 10, 3);
  BoostConfig cfg;
  cfg.loss = Loss::binomial_deviance();
  cfg.epsilon = 0.1;
  cfg.steps = 5;
  CHECK_THROWS_AS(boost(reg, cfg), InvalidLabel);

  BoostConfig bad;
  bad.loss = Loss::squared();
  bad.epsilon = 0.0;
  bad.steps = 5;
  CHECK_THROWS_AS(boost(reg, bad), OutOfRange);
}
