#pragma once

#include <string>
#include <vector>

#include "regpath/dataset.hpp"
#include "regpath/loss.hpp"
#include "regpath/matrix.hpp"

namespace regpath {

enum class PathEventKind { entry, drop, regime_change, terminal, grid };

struct PathEvent {
  PathEventKind kind = PathEventKind::terminal;
  std::size_t index = 0;        // variable (entry/drop) or observation (regime change)
  bool into_quadratic = false;  // regime change target zone

  static PathEvent entry(std::size_t j) { return {PathEventKind::entry, j, false}; }
  static PathEvent drop(std::size_t j) { return {PathEventKind::drop, j, false}; }
  static PathEvent regime(std::size_t i, bool quad) {
    return {PathEventKind::regime_change, i, quad};
  }
  static PathEvent terminal() { return {PathEventKind::terminal, 0, false}; }
  static PathEvent grid() { return {PathEventKind::grid, 0, false}; }

  std::string str() const;
  static PathEvent parse(const std::string& s);

  bool operator==(const PathEvent&) const = default;
};

enum class PathStatus {
  complete,               // reached lambda = 0
  halted_rank_deficient,  // active set hit the sample rank limit
  degenerate_finish,      // exact homotopy stopped; endpoint supplied by the fixed-point solver
  halted_degenerate,      // stopped early, no usable endpoint
};

std::string to_string(PathStatus s);

/// Exact piecewise-linear coefficient path. Between breakpoints k and k+1,
/// beta(lambda) = betas[k] + (lambdas[k] - lambda) * directions[k]; the
/// directions are stored per unit *decrease* of lambda.
struct PiecewisePath {
  Loss loss;
  std::size_t n_obs = 0;
  std::vector<std::string> feature_names;

  Vector lambdas;                  // strictly decreasing, lambdas.front() = entry threshold
  std::vector<Vector> betas;       // one per breakpoint
  std::vector<Vector> directions;  // one per segment: lambdas.size() - 1
  std::vector<PathEvent> events;   // one per breakpoint

  PathStatus status = PathStatus::complete;
  std::string diagnostic;

  std::size_t breakpoint_count() const { return lambdas.size(); }
  std::size_t p() const { return betas.empty() ? 0 : betas.front().size(); }
  double lambda_start() const { return lambdas.front(); }
  double lambda_end() const { return lambdas.back(); }
};

/// LARS-Lasso homotopy for squared loss: every variable entry and drop is an
/// exact breakpoint. Starts at the entry threshold with beta = 0 and runs to
/// lambda = 0 (or halts when the active set reaches the sample rank limit).
PiecewisePath lasso_path(const Dataset& ds);

/// Event-driven homotopy for the Huber loss with knot delta. Events are
/// variable entries, drops, and residual crossings of +-delta (regime
/// changes); the direction solve restricts the curvature to the quadratic
/// zone. A singular restricted Hessian ends the exact path; the lambda ~ 0
/// endpoint is then supplied by the proximal solver when possible.
PiecewisePath huberized_lasso_path(const Dataset& ds, double delta);

/// beta(lambda) by exact interpolation. Breakpoint lambdas return the stored
/// vector bit-exactly. Strict range: lambda must lie inside
/// [lambda_end, lambda_start].
Vector evaluate_path(const PiecewisePath& path, double lambda);

}  // namespace regpath
