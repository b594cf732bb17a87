#include "regpath/boosting.hpp"

#include <cmath>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"

namespace regpath {

double BoostTrace::max_recorded_l1() const {
  double m = 0.0;
  for (const auto& r : records) m = std::max(m, r.l1);
  return m;
}

BoostTrace boost(const Dataset& ds, const BoostConfig& cfg) {
  ds.validate();
  if (!(cfg.epsilon > 0.0)) throw OutOfRange("boost: epsilon must be positive");
  if (cfg.loss.margin_based() && ds.task != Task::binary)
    throw InvalidLabel("boost: " + cfg.loss.name() + " loss requires a binary dataset");

  const std::size_t n = ds.n(), p = ds.p();
  const std::size_t thin = cfg.effective_thin();

  BoostTrace trace;
  trace.config = cfg;
  trace.n_obs = n;
  trace.n_features = p;
  trace.feature_names = ds.feature_names;

  Vector beta(p, 0.0);
  Vector fit(n, 0.0);
  Vector w(n), grad;

  auto loss_total = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += cfg.loss.value(ds.y[i], fit[i]);
    return s;
  };
  auto record = [&](std::size_t t, std::size_t coord) {
    BoostRecord r;
    r.iteration = t;
    r.coordinate = coord;
    r.total_loss = loss_total();
    r.l1 = l1_norm(beta);
    r.beta = beta;
    if (!std::isfinite(r.total_loss))
      throw NonFinite("boost: non-finite loss at iteration " + std::to_string(t));
    trace.records.push_back(std::move(r));
  };

  record(0, SIZE_MAX);

  for (std::size_t t = 1; t <= cfg.steps; ++t) {
    for (std::size_t i = 0; i < n; ++i) w[i] = cfg.loss.deriv(ds.y[i], fit[i]);
    kernels::matvec_t(ds.x, w, grad);
    if (!all_finite(grad)) throw NonFinite("boost: non-finite gradient at iteration " + std::to_string(t));

    std::size_t jt = 0;
    for (std::size_t j = 1; j < p; ++j)
      if (std::fabs(grad[j]) > std::fabs(grad[jt])) jt = j;  // ties keep the lowest index

    if (grad[jt] == 0.0) {
      trace.stopped_at_stationary = true;
      trace.iterations_run = t - 1;
      if (trace.records.back().iteration != t - 1) record(t - 1, SIZE_MAX);
      return trace;
    }

    const double step = (grad[jt] > 0.0) ? -cfg.epsilon : cfg.epsilon;
    beta[jt] += step;
    for (std::size_t i = 0; i < n; ++i) fit[i] += step * ds.x(i, jt);

    if (t % thin == 0 || t == cfg.steps) record(t, jt);
  }

  trace.iterations_run = cfg.steps;
  return trace;
}

const Vector& trace_at_norm(const BoostTrace& trace, double s) {
  if (trace.records.empty()) throw OutOfRange("trace_at_norm: empty trace");
  if (s < 0.0) throw OutOfRange("trace_at_norm: norm must be nonnegative");
  const double max_l1 = trace.max_recorded_l1();
  if (s > max_l1)
    throw OutOfRange("trace_at_norm: requested norm " + std::to_string(s) +
                     " exceeds the largest recorded norm " + std::to_string(max_l1));
  const BoostRecord* best = &trace.records.front();
  double best_gap = std::fabs(best->l1 - s);
  for (const auto& r : trace.records) {
    const double gap = std::fabs(r.l1 - s);
    if (gap < best_gap) {  // strict: earliest iteration wins ties
      best = &r;
      best_gap = gap;
    }
  }
  return best->beta;
}

}  // namespace regpath
