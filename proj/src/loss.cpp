#include "regpath/loss.hpp"

#include <atomic>
#include <cmath>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"

namespace regpath {

namespace {
std::atomic<std::uint64_t> g_exp_clamps{0};
}

double clamped_exp(double arg) {
  if (arg > 500.0) {
    g_exp_clamps.fetch_add(1, std::memory_order_relaxed);
    arg = 500.0;
  } else if (arg < -500.0) {
    g_exp_clamps.fetch_add(1, std::memory_order_relaxed);
    arg = -500.0;
  }
  return std::exp(arg);
}

std::uint64_t exp_clamp_count() { return g_exp_clamps.load(std::memory_order_relaxed); }
void reset_exp_clamp_count() { g_exp_clamps.store(0, std::memory_order_relaxed); }

Loss Loss::huber(double delta) {
  if (!(delta > 0.0)) throw OutOfRange("huber: delta must be positive");
  return {LossKind::huber, delta};
}

Loss Loss::parse(const std::string& token, double delta) {
  if (token == "squared") return squared();
  if (token == "huber") return huber(delta);
  if (token == "hinge") return hinge();
  if (token == "exp") return exponential();
  if (token == "logistic") return binomial_deviance();
  throw OutOfRange("unknown loss '" + token + "' (expected squared|huber|hinge|exp|logistic)");
}

std::string Loss::name() const {
  switch (kind) {
    case LossKind::squared: return "squared";
    case LossKind::huber: return "huber";
    case LossKind::hinge: return "hinge";
    case LossKind::exponential: return "exp";
    case LossKind::binomial_deviance: return "logistic";
  }
  return "?";
}

void Loss::check_label(double y) const {
  if (margin_based() && y != 1.0 && y != -1.0)
    throw InvalidLabel(name() + " loss requires labels in {-1, +1}");
}

double Loss::value(double y, double f) const {
  switch (kind) {
    case LossKind::squared: {
      const double r = y - f;
      return r * r;
    }
    case LossKind::huber: {
      const double r = y - f;
      const double a = std::fabs(r);
      if (a <= delta) return r * r;
      return delta * delta + 2.0 * delta * (a - delta);
    }
    case LossKind::hinge: {
      check_label(y);
      const double m = y * f;
      return m <= 1.0 ? 1.0 - m : 0.0;
    }
    case LossKind::exponential:
      check_label(y);
      return clamped_exp(-y * f);
    case LossKind::binomial_deviance: {
      check_label(y);
      const double m = -y * f;
      // log(1 + e^m), stable for large |m|
      if (m > 35.0) return m;
      return std::log1p(clamped_exp(m));
    }
  }
  return 0.0;
}

double Loss::deriv(double y, double f) const {
  switch (kind) {
    case LossKind::squared:
      return -2.0 * (y - f);
    case LossKind::huber: {
      const double r = y - f;
      if (r > delta) return -2.0 * delta;
      if (r < -delta) return 2.0 * delta;
      return -2.0 * r;
    }
    case LossKind::hinge: {
      check_label(y);
      return (y * f < 1.0) ? -y : 0.0;
    }
    case LossKind::exponential:
      check_label(y);
      return -y * clamped_exp(-y * f);
    case LossKind::binomial_deviance:
      check_label(y);
      // -y * sigmoid(-y f)
      return -y / (1.0 + clamped_exp(y * f));
  }
  return 0.0;
}

double Loss::second_deriv(double y, double f) const {
  switch (kind) {
    case LossKind::squared:
      return 2.0;
    case LossKind::huber:
      return (std::fabs(y - f) <= delta) ? 2.0 : 0.0;
    case LossKind::hinge:
      check_label(y);
      return 0.0;
    case LossKind::exponential:
      check_label(y);
      return clamped_exp(-y * f);
    case LossKind::binomial_deviance: {
      check_label(y);
      const double s = 1.0 / (1.0 + clamped_exp(y * f));
      return s * (1.0 - s);
    }
  }
  return 0.0;
}

Vector gradient_beta_at_fit(const Dataset& ds, const Loss& loss, const Vector& fit) {
  if (fit.size() != ds.n()) throw DimensionMismatch("gradient_beta: fit length does not match n");
  Vector w(ds.n());
  for (std::size_t i = 0; i < ds.n(); ++i) w[i] = loss.deriv(ds.y[i], fit[i]);
  Vector g;
  kernels::matvec_t(ds.x, w, g);
  return g;
}

Vector gradient_beta(const Dataset& ds, const Loss& loss, const Vector& beta) {
  if (beta.size() != ds.p()) throw DimensionMismatch("gradient_beta: beta length does not match p");
  Vector fit;
  kernels::matvec(ds.x, beta, fit);
  return gradient_beta_at_fit(ds, loss, fit);
}

double total_loss(const Dataset& ds, const Loss& loss, const Vector& beta) {
  Vector fit;
  kernels::matvec(ds.x, beta, fit);
  double s = 0.0;
  for (std::size_t i = 0; i < ds.n(); ++i) s += loss.value(ds.y[i], fit[i]);
  return s;
}

double objective(const Dataset& ds, const Loss& loss, double lambda, const Vector& beta) {
  if (lambda < 0.0) throw OutOfRange("objective: lambda must be nonnegative");
  return total_loss(ds, loss, beta) + lambda * l1_norm(beta);
}

double lambda_max(const Dataset& ds, const Loss& loss) {
  return linf_norm(gradient_beta(ds, loss, Vector(ds.p(), 0.0)));
}

double kkt_residual(const Dataset& ds, const Loss& loss, double lambda, const Vector& beta) {
  if (lambda < 0.0) throw OutOfRange("kkt_residual: lambda must be nonnegative");
  const Vector g = gradient_beta(ds, loss, beta);
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

}  // namespace regpath
