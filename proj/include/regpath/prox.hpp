#pragma once

#include <string>
#include <vector>

#include "regpath/dataset.hpp"
#include "regpath/loss.hpp"
#include "regpath/matrix.hpp"

namespace regpath {

/// Proximal-gradient solver settings. The default initial step is
/// 1 / (curvature factor * |X|_op^2) with the operator norm estimated by
/// power iteration; backtracking only ever shrinks it.
struct OracleConfig {
  std::size_t max_iters = 100000;
  double kkt_tol = 1e-8;
  double backtrack_shrink = 0.5;
  double initial_step = 0.0;  // 0 = derive from the curvature bound
  std::size_t power_iters = 50;
  bool track_objective = false;  // record the objective after every accepted step
};

enum class SolveStatus { converged, max_iters_exceeded };

struct SolveResult {
  Vector beta;
  double kkt = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::converged;
  Vector objective_trace;  // only when track_objective
};

/// Minimize sum_i L(y_i, x_i^t beta) + lambda |beta|_1 at one fixed lambda by
/// gradient steps on the smooth loss followed by soft-thresholding, with
/// backtracking. Hinge is excluded (non-differentiable). Non-convergence is
/// reported in the result, not thrown.
SolveResult solve_l1(const Dataset& ds, const Loss& loss, double lambda,
                     const OracleConfig& cfg = {}, const Vector* warm_start = nullptr);

/// Solutions over a decreasing penalty grid, each warm-started from the last.
struct GridPath {
  Loss loss;
  std::size_t n_obs = 0;
  std::vector<std::string> feature_names;

  Vector lambdas;  // strictly decreasing
  std::vector<Vector> betas;
  Vector kkt_residuals;
  std::vector<std::size_t> iterations;

  std::size_t p() const { return betas.empty() ? 0 : betas.front().size(); }
};

/// Throws with the offending lambda identified when a point fails to converge.
GridPath solve_grid(const Dataset& ds, const Loss& loss, const Vector& lambdas,
                    const OracleConfig& cfg = {});

/// Log-spaced decreasing grid from `from` down to `to` inclusive.
Vector log_spaced(double from, double to, std::size_t count);

}  // namespace regpath
