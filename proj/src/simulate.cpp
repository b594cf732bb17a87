#include "regpath/simulate.hpp"

#include <cmath>

#include "regpath/errors.hpp"
#include "regpath/random.hpp"

namespace regpath {

Dataset simulate_contaminated(const ContaminatedSimConfig& cfg) {
  if (cfg.n == 0 || cfg.p == 0)
    throw DimensionMismatch("simulate_contaminated: n and p must be at least 1");
  if (cfg.outlier_prob < 0.0 || cfg.outlier_prob > 1.0)
    throw OutOfRange("simulate_contaminated: outlier_prob must lie in [0, 1]");
  if (cfg.inlier_sd <= 0.0 || cfg.outlier_sd <= 0.0)
    throw OutOfRange("simulate_contaminated: standard deviations must be positive");

  RandomStream rng(cfg.seed);
  Dataset ds;
  ds.task = Task::regression;
  ds.x = Matrix(cfg.n, cfg.p);
  for (double& v : ds.x.data) v = rng.next_normal();
  ds.y.resize(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    const double u = rng.next_uniform();
    const double sd = (u < cfg.outlier_prob) ? cfg.outlier_sd : cfg.inlier_sd;
    ds.y[i] = cfg.signal * ds.x(i, 0) + sd * rng.next_normal();
  }
  ds.validate();
  return ds;
}

Dataset simulate_binary(const BinarySimConfig& cfg) {
  if (cfg.n == 0 || cfg.p == 0) throw DimensionMismatch("simulate_binary: n and p must be at least 1");
  if (cfg.true_beta.size() != cfg.p)
    throw DimensionMismatch("simulate_binary: true_beta length does not match p");

  RandomStream rng(cfg.seed);
  Dataset ds;
  ds.task = Task::binary;
  ds.x = Matrix(cfg.n, cfg.p);
  for (double& v : ds.x.data) v = rng.next_normal();
  ds.y.resize(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    double f = 0.0;
    for (std::size_t j = 0; j < cfg.p; ++j) f += ds.x(i, j) * cfg.true_beta[j];
    const double prob = 1.0 / (1.0 + std::exp(-f));
    ds.y[i] = (rng.next_uniform() < prob) ? 1.0 : -1.0;
  }
  ds.validate();
  return ds;
}

}  // namespace regpath
