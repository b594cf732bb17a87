#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regpath/dataset.hpp"
#include "regpath/loss.hpp"
#include "regpath/matrix.hpp"

namespace regpath {

/// Fixed-step coordinate descent: at each iteration pick the coordinate with
/// the largest absolute gradient of the total loss and move it by epsilon
/// against the gradient sign. Squared loss makes this forward stagewise;
/// exponential loss makes it an AdaBoost variant.
struct BoostConfig {
  double epsilon = 0.0;
  std::size_t steps = 0;
  std::size_t thin = 0;  // record every thin-th iteration; 0 = max(1, steps/1000)
  Loss loss;

  std::size_t effective_thin() const {
    if (thin > 0) return thin;
    return std::max<std::size_t>(1, steps / 1000);
  }
};

struct BoostRecord {
  std::size_t iteration = 0;
  std::size_t coordinate = SIZE_MAX;  // the coordinate stepped to reach this iterate
  double total_loss = 0.0;
  double l1 = 0.0;
  Vector beta;
};

struct BoostTrace {
  BoostConfig config;
  std::size_t n_obs = 0;
  std::size_t n_features = 0;
  std::vector<std::string> feature_names;

  std::vector<BoostRecord> records;  // iteration 0 first; final iterate always present
  std::size_t iterations_run = 0;
  bool stopped_at_stationary = false;

  double max_recorded_l1() const;
};

BoostTrace boost(const Dataset& ds, const BoostConfig& cfg);

/// Recorded iterate whose L1 norm is closest to s, earliest iteration on
/// ties. s must not exceed the largest recorded norm.
const Vector& trace_at_norm(const BoostTrace& trace, double s);

}  // namespace regpath
