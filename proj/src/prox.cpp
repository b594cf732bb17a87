#include "regpath/prox.hpp"

#include <cmath>
#include <string>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"

namespace regpath {

namespace {

double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

// Largest eigenvalue of X^T X by power iteration (deterministic start).
double op_norm_squared(const Matrix& x, std::size_t iters) {
  Vector v(x.cols, 1.0 / std::sqrt(static_cast<double>(x.cols)));
  Vector xv, w;
  double rho = 0.0;
  for (std::size_t it = 0; it < iters; ++it) {
    kernels::matvec(x, v, xv);
    kernels::matvec_t(x, xv, w);
    const double norm = l2_norm(w);
    if (norm == 0.0) return 0.0;
    rho = kernels::dot(v, w);
    for (std::size_t j = 0; j < w.size(); ++j) v[j] = w[j] / norm;
  }
  return rho;
}

// Curvature factor: upper bound on the per-observation second derivative at
// the start point, loose for the exponential loss where backtracking takes
// over as the fit grows.
double curvature_factor(const Loss& loss) {
  switch (loss.kind) {
    case LossKind::squared:
    case LossKind::huber:
      return 2.0;
    case LossKind::exponential:
      return 1.0;
    case LossKind::binomial_deviance:
      return 0.25;
    default:
      return 2.0;
  }
}

double kkt_from_gradient(const Vector& g, double lambda, const Vector& beta) {
  double worst = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    double v;
    if (beta[j] > 0.0)
      v = std::fabs(g[j] + lambda);
    else if (beta[j] < 0.0)
      v = std::fabs(g[j] - lambda);
    else
      v = std::max(0.0, std::fabs(g[j]) - lambda);
    worst = std::max(worst, v);
  }
  return worst;
}

}  // namespace

SolveResult solve_l1(const Dataset& ds, const Loss& loss, double lambda, const OracleConfig& cfg,
                     const Vector* warm_start) {
  if (!loss.differentiable())
    throw OutOfRange("solve_l1: " + loss.name() + " loss is not differentiable");
  if (lambda < 0.0) throw OutOfRange("solve_l1: lambda must be nonnegative");
  ds.validate();

  const std::size_t n = ds.n(), p = ds.p();
  SolveResult res;
  res.beta = warm_start ? *warm_start : Vector(p, 0.0);
  if (res.beta.size() != p) throw DimensionMismatch("solve_l1: warm start length does not match p");

  double step = cfg.initial_step;
  if (step <= 0.0) {
    const double bound = curvature_factor(loss) * op_norm_squared(ds.x, cfg.power_iters);
    step = (bound > 0.0) ? 1.0 / bound : 1.0;
  }

  Vector fit(n), w(n), grad, beta_next(p), fit_next(n);
  kernels::matvec(ds.x, res.beta, fit);
  auto smooth = [&](const Vector& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += loss.value(ds.y[i], f[i]);
    return s;
  };
  double fval = smooth(fit);
  for (std::size_t i = 0; i < n; ++i) w[i] = loss.deriv(ds.y[i], fit[i]);
  kernels::matvec_t(ds.x, w, grad);

  if (cfg.track_objective) res.objective_trace.push_back(fval + lambda * l1_norm(res.beta));

  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    if (!std::isfinite(fval) || !all_finite(grad))
      throw NonFinite("solve_l1: non-finite loss or gradient at iteration " + std::to_string(iter));
    res.kkt = kkt_from_gradient(grad, lambda, res.beta);
    res.iterations = iter;
    if (res.kkt <= cfg.kkt_tol) {
      res.status = SolveStatus::converged;
      return res;
    }

    // Backtrack until the quadratic majorization holds at the prox point.
    double fnext = 0.0;
    for (;;) {
      for (std::size_t j = 0; j < p; ++j)
        beta_next[j] = soft_threshold(res.beta[j] - step * grad[j], step * lambda);
      kernels::matvec(ds.x, beta_next, fit_next);
      fnext = smooth(fit_next);
      double lin = 0.0, quad = 0.0;
      for (std::size_t j = 0; j < p; ++j) {
        const double d = beta_next[j] - res.beta[j];
        lin += grad[j] * d;
        quad += d * d;
      }
      const double majorant = fval + lin + quad / (2.0 * step);
      if (fnext <= majorant + 1e-12 * (1.0 + std::fabs(fval))) break;
      step *= cfg.backtrack_shrink;
      if (step < 1e-18)
        throw NonFinite("solve_l1: backtracking step underflow at iteration " +
                        std::to_string(iter));
    }

    res.beta.swap(beta_next);
    fit.swap(fit_next);
    fval = fnext;
    for (std::size_t i = 0; i < n; ++i) w[i] = loss.deriv(ds.y[i], fit[i]);
    kernels::matvec_t(ds.x, w, grad);
    if (cfg.track_objective) res.objective_trace.push_back(fval + lambda * l1_norm(res.beta));
  }

  res.kkt = kkt_from_gradient(grad, lambda, res.beta);
  res.iterations = cfg.max_iters;
  res.status = SolveStatus::max_iters_exceeded;
  return res;
}

GridPath solve_grid(const Dataset& ds, const Loss& loss, const Vector& lambdas,
                    const OracleConfig& cfg) {
  if (lambdas.empty()) throw OutOfRange("solve_grid: empty lambda list");
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    if (lambdas[k] < 0.0) throw OutOfRange("solve_grid: lambdas must be nonnegative");
    if (k > 0 && lambdas[k] >= lambdas[k - 1])
      throw OutOfRange("solve_grid: lambdas must be strictly decreasing");
  }

  GridPath path;
  path.loss = loss;
  path.n_obs = ds.n();
  path.feature_names = ds.feature_names;
  path.lambdas = lambdas;
  path.betas.reserve(lambdas.size());
  path.kkt_residuals.reserve(lambdas.size());
  path.iterations.reserve(lambdas.size());

  Vector warm(ds.p(), 0.0);
  for (double lambda : lambdas) {
    SolveResult r = solve_l1(ds, loss, lambda, cfg, &warm);
    if (r.status != SolveStatus::converged)
      throw NonFinite("solve_grid: no convergence at lambda = " + std::to_string(lambda) +
                      " (kkt " + std::to_string(r.kkt) + " after " + std::to_string(r.iterations) +
                      " iterations)");
    warm = r.beta;
    path.betas.push_back(std::move(r.beta));
    path.kkt_residuals.push_back(r.kkt);
    path.iterations.push_back(r.iterations);
  }
  return path;
}

Vector log_spaced(double from, double to, std::size_t count) {
  if (!(from > 0.0) || !(to > 0.0)) throw OutOfRange("log_spaced: endpoints must be positive");
  if (!(from > to)) throw OutOfRange("log_spaced: expected from > to");
  if (count < 2) throw OutOfRange("log_spaced: need at least 2 points");
  Vector out(count);
  const double lf = std::log(from), lt = std::log(to);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    out[k] = std::exp(lf + t * (lt - lf));
  }
  out.front() = from;
  out.back() = to;
  return out;
}

}  // namespace regpath
