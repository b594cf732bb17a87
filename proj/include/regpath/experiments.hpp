#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regpath/compare.hpp"
#include "regpath/simulate.hpp"

namespace regpath {

/// Contaminated-regression comparison: Lasso vs Huberized Lasso, both scored
/// at the penalty minimizing distance to the known generating coefficients.
struct HuberLassoConfig {
  ContaminatedSimConfig sim;  // sim.seed is ignored; the per-run seeds below drive it
  double delta = 1.0;
  std::vector<std::uint64_t> seeds;
};

struct HuberLassoSeedResult {
  std::uint64_t seed = 0;
  double huber_beta1 = 0.0, lasso_beta1 = 0.0;
  double huber_err = 0.0, lasso_err = 0.0;  // |beta_hat - beta_true|_2 at the oracle penalty
  double huber_lambda = 0.0, lasso_lambda = 0.0;
  bool huber_wins = false;
  std::string error;  // nonempty when this seed failed; excluded from aggregates
};

struct HuberLassoReport {
  HuberLassoConfig config;
  std::vector<HuberLassoSeedResult> per_seed;
  std::size_t valid_seeds = 0;
  std::size_t huber_wins = 0;
  double win_rate = 0.0;
  double huber_median_beta1_abs_err = 0.0;
  double lasso_median_beta1_abs_err = 0.0;
  double huber_median_err = 0.0;
  double lasso_median_err = 0.0;
};

HuberLassoReport run_huber_vs_lasso(const HuberLassoConfig& cfg);

/// Boosting-vs-exact-path agreement on a synthetic logistic problem: the
/// coordinate-descent trace is matched against a warm-started penalty grid
/// by L1 norm.
struct BoostEquivConfig {
  BinarySimConfig sim;
  double epsilon = 0.003;
  std::size_t steps = 7000;
  std::size_t thin = 0;  // 0 = auto
  std::size_t grid_points = 100;
  double grid_floor_factor = 1e-3;  // grid runs from lambda_max down to lambda_max * this
};

struct BoostEquivReport {
  BoostEquivConfig config;
  DiscrepancyReport discrepancy;
  double lambda_max = 0.0;
  double grid_max_norm = 0.0;
  double trace_max_norm = 0.0;
};

BoostEquivReport run_boost_equivalence(const BoostEquivConfig& cfg);

std::string report_to_json(const HuberLassoReport& report);
std::string report_to_json(const BoostEquivReport& report);
std::string report_to_json(const DiscrepancyReport& report);

}  // namespace regpath
