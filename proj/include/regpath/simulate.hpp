#pragma once

#include <cstdint>

#include "regpath/dataset.hpp"

namespace regpath {

/// Regression design with a two-component normal noise mixture:
/// y_i = signal * x_i1 + eps_i, where eps_i comes from N(0, inlier_sd^2)
/// with probability 1 - outlier_prob and N(0, outlier_sd^2) otherwise.
struct ContaminatedSimConfig {
  std::size_t n = 100;
  std::size_t p = 80;
  double signal = 10.0;
  double inlier_sd = 1.0;
  double outlier_sd = 10.0;
  double outlier_prob = 0.1;
  std::uint64_t seed = 0;
};

/// Binary design: X i.i.d. standard normal, P(y_i = +1) = logistic(x_i^t beta).
struct BinarySimConfig {
  std::size_t n = 300;
  std::size_t p = 5;
  Vector true_beta;
  std::uint64_t seed = 0;
};

/// Draw order is fixed for reproducibility: all of X row-major first, then
/// per observation one uniform (component pick: outlier iff u < outlier_prob)
/// followed by one normal.
Dataset simulate_contaminated(const ContaminatedSimConfig& cfg);

/// Draw order: all of X row-major first, then per observation one uniform
/// compared against logistic(x_i^t beta).
Dataset simulate_binary(const BinarySimConfig& cfg);

}  // namespace regpath
