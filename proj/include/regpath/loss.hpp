#pragma once

#include <cstdint>
#include <string>

#include "regpath/dataset.hpp"
#include "regpath/matrix.hpp"

namespace regpath {

enum class LossKind { squared, huber, hinge, exponential, binomial_deviance };

/// Per-observation loss L(y, f) in the fit f = x^t beta, with first and
/// second derivatives in f. Losses are summed over observations, never
/// averaged, so penalty strengths stay on the same scale as the objective
/// sum_i L(y_i, x_i^t beta) + lambda * |beta|_1.
///
/// Kink conventions (fixed so solver behavior is deterministic):
///  - Huber: the knot |y - f| = delta belongs to the quadratic zone, and the
///    derivative there takes the quadratic-branch value -+2*delta.
///  - Hinge: derivative 0 at the margin y*f = 1.
struct Loss {
  LossKind kind = LossKind::squared;
  double delta = 1.0;  // Huber knot, used only when kind == huber

  static Loss squared() { return {LossKind::squared, 0.0}; }
  static Loss huber(double delta);
  static Loss hinge() { return {LossKind::hinge, 0.0}; }
  static Loss exponential() { return {LossKind::exponential, 0.0}; }
  static Loss binomial_deviance() { return {LossKind::binomial_deviance, 0.0}; }

  /// Parse a CLI token: squared | huber | hinge | exp | logistic.
  static Loss parse(const std::string& token, double delta);

  double value(double y, double f) const;
  double deriv(double y, double f) const;
  double second_deriv(double y, double f) const;

  bool margin_based() const {
    return kind == LossKind::hinge || kind == LossKind::exponential ||
           kind == LossKind::binomial_deviance;
  }
  bool differentiable() const { return kind != LossKind::hinge; }

  std::string name() const;

  /// Throws InvalidLabel unless y is +-1 for margin losses.
  void check_label(double y) const;
};

/// exp() with the argument clamped to [-500, 500]; clamps are counted in a
/// process-wide diagnostic readable via exp_clamp_count().
double clamped_exp(double arg);
std::uint64_t exp_clamp_count();
void reset_exp_clamp_count();

/// Gradient of the total loss with respect to beta:
/// component j is sum_i L'(y_i, x_i^t beta) * x_ij.
Vector gradient_beta(const Dataset& ds, const Loss& loss, const Vector& beta);

/// Same, reusing an already computed fit vector f = X beta.
Vector gradient_beta_at_fit(const Dataset& ds, const Loss& loss, const Vector& fit);

/// sum_i L(y_i, x_i^t beta) + lambda * |beta|_1
double objective(const Dataset& ds, const Loss& loss, double lambda, const Vector& beta);

/// Total loss only (the smooth part of the objective for differentiable losses).
double total_loss(const Dataset& ds, const Loss& loss, const Vector& beta);

/// Smallest penalty at which beta = 0 is stationary:
/// max_j |gradient_beta(ds, loss, 0)_j|.
double lambda_max(const Dataset& ds, const Loss& loss);

/// Violation of the L1 stationarity conditions at (lambda, beta):
/// max_j of |g_j + lambda*sign(beta_j)| over nonzero beta_j and
/// max(0, |g_j| - lambda) over zero ones. Zero iff beta is optimal.
double kkt_residual(const Dataset& ds, const Loss& loss, double lambda, const Vector& beta);

}  // namespace regpath
