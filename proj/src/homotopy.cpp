#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "regpath/errors.hpp"
#include "regpath/kernels.hpp"
#include "regpath/linalg.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"

namespace regpath {

namespace {

// Events closer than this in lambda are treated as coincident and processed
// at a single breakpoint.
constexpr double kTieEps = 1e-10;

struct Candidate {
  double lambda = 0.0;
  PathEvent event;
};

int event_priority(const PathEvent& e) {
  switch (e.kind) {
    case PathEventKind::drop:
      return 0;
    case PathEventKind::regime_change:
      return 1;
    default:
      return 2;  // entry
  }
}

// Largest lambda wins; coincident candidates break ties by drop < regime
// change < entry, then lowest index.
Candidate select_candidate(const std::vector<Candidate>& cands) {
  double lam_best = cands.front().lambda;
  for (const Candidate& c : cands) lam_best = std::max(lam_best, c.lambda);
  const Candidate* best = nullptr;
  for (const Candidate& c : cands) {
    if (c.lambda < lam_best - kTieEps) continue;
    if (best == nullptr || event_priority(c.event) < event_priority(best->event) ||
        (event_priority(c.event) == event_priority(best->event) &&
         c.event.index < best->event.index))
      best = &c;
  }
  return *best;
}

// Roots of |c_j(lambda)| = lambda along the current segment, where
// c_j(lambda) = c_j - (lam - lambda) * a_j. Both crossings are candidates;
// the caller's global max picks the first one reached. Roots a hair above
// lam are roundoff from coincident events and are clamped onto it.
void entry_candidates(std::size_t j, double c_j, double a_j, double lam,
                      std::vector<Candidate>& out) {
  const double upper = lam + std::max(1e-9 * lam, 1e-12);
  const double denom_plus = 1.0 - a_j;
  if (std::fabs(denom_plus) > 1e-12) {
    const double l = (c_j - lam * a_j) / denom_plus;
    if (l > 0.0 && l <= upper) out.push_back({std::min(l, lam), PathEvent::entry(j)});
  }
  const double denom_minus = 1.0 + a_j;
  if (std::fabs(denom_minus) > 1e-12) {
    const double l = (lam * a_j - c_j) / denom_minus;
    if (l > 0.0 && l <= upper) out.push_back({std::min(l, lam), PathEvent::entry(j)});
  }
}

// Zero crossings of active coefficients. A coefficient that slid past zero
// by roundoff (sign disagrees with its stored sign) is an overdue drop and
// fires immediately.
void drop_candidates(const std::vector<std::size_t>& active, const Vector& signs,
                     const Vector& gamma_a, const Vector& beta, double lam,
                     std::vector<Candidate>& out) {
  for (std::size_t idx = 0; idx < active.size(); ++idx) {
    const std::size_t j = active[idx];
    if (beta[j] == 0.0) continue;
    if (beta[j] * signs[idx] < 0.0) {
      out.push_back({lam, PathEvent::drop(j)});
      continue;
    }
    if (gamma_a[idx] == 0.0) continue;
    const double ratio = beta[j] / gamma_a[idx];
    if (ratio < 0.0) {
      const double l = lam + ratio;
      if (l > 0.0) out.push_back({l, PathEvent::drop(j)});
    }
  }
}

// Appends breakpoints; events within kTieEps of the latest breakpoint update
// its state instead of opening a zero-length segment.
struct PathBuilder {
  PiecewisePath path;

  void record_first(double lam, const Vector& beta, PathEvent ev) {
    path.lambdas.push_back(lam);
    path.betas.push_back(beta);
    path.events.push_back(ev);
  }

  void record(double lam, double delta_lam, const Vector& beta, const Vector& gamma_full,
              PathEvent ev) {
    if (delta_lam <= kTieEps && !path.lambdas.empty()) {
      path.betas.back() = beta;  // coincident event: same breakpoint, updated state
      return;
    }
    path.lambdas.push_back(lam);
    path.betas.push_back(beta);
    path.events.push_back(ev);
    path.directions.push_back(gamma_full);
  }
};

Vector expand_direction(const std::vector<std::size_t>& active, const Vector& gamma_a,
                        std::size_t p) {
  Vector full(p, 0.0);
  for (std::size_t idx = 0; idx < active.size(); ++idx) full[active[idx]] = gamma_a[idx];
  return full;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t j : v) {
    if (!s.empty()) s += ", ";
    s += std::to_string(j + 1);
  }
  return s;
}

std::size_t argmax_abs(const Vector& v) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < v.size(); ++j)
    if (std::fabs(v[j]) > std::fabs(v[best])) best = j;
  return best;
}

}  // namespace

PiecewisePath lasso_path(const Dataset& ds) {
  ds.validate();
  if (ds.task != Task::regression) throw InvalidLabel("lasso_path: regression task required");
  const std::size_t n = ds.n(), p = ds.p();

  PathBuilder out;
  out.path.loss = Loss::squared();
  out.path.n_obs = n;
  out.path.feature_names = ds.feature_names;

  Vector beta(p, 0.0);
  Vector fit(n), resid(n), c;
  auto refresh = [&]() {
    kernels::matvec(ds.x, beta, fit);
    for (std::size_t i = 0; i < n; ++i) resid[i] = ds.y[i] - fit[i];
    kernels::matvec_t(ds.x, resid, c);
    for (double& v : c) v *= 2.0;
  };
  refresh();

  double lam = linf_norm(c);
  if (lam <= 0.0) {
    out.record_first(0.0, beta, PathEvent::terminal());
    return out.path;
  }

  const std::size_t j0 = argmax_abs(c);
  out.record_first(lam, beta, PathEvent::entry(j0));

  std::vector<std::size_t> active{j0};
  Vector signs{c[j0] >= 0.0 ? 1.0 : -1.0};
  std::vector<std::uint8_t> is_active(p, 0);
  is_active[j0] = 1;
  std::size_t barred = SIZE_MAX;

  const std::size_t step_limit = 10 * p + 100;
  std::size_t events_processed = 1;

  while (true) {
    if (++events_processed > step_limit)
      throw StepLimitExceeded("lasso_path: more than " + std::to_string(step_limit) + " events");

    // Direction: solve 2 X_A^T X_A gamma = s_A, re-factored from scratch.
    Vector gamma_a;
    for (;;) {
      if (active.empty()) {
        gamma_a.clear();
        break;
      }
      Matrix gram;
      kernels::gram(ds.x, active, {}, 2.0, gram);
      try {
        gamma_a = Cholesky::factor(gram).solve(signs);
      } catch (const NotPositiveDefinite&) {
        if (active.size() > n) {
          out.path.status = PathStatus::halted_rank_deficient;
          out.path.diagnostic =
              "active set {" + index_list(active) + "} exceeds the sample rank; path halted";
          return out.path;
        }
        throw CollinearActiveSet("lasso_path: singular system for active set {" +
                                 index_list(active) + "}");
      }
      // A freshly entered coordinate must leave zero with its stored sign;
      // otherwise the entry was a degenerate tie and is undone.
      std::size_t bad = SIZE_MAX;
      for (std::size_t idx = 0; idx < active.size(); ++idx)
        if (beta[active[idx]] == 0.0 && gamma_a[idx] * signs[idx] < -1e-12) {
          bad = idx;
          break;
        }
      if (bad == SIZE_MAX) break;
      const std::size_t j = active[bad];
      is_active[j] = 0;
      barred = j;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(bad));
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(bad));
    }

    Vector u, a;
    kernels::matvec_active(ds.x, active, gamma_a, u);
    kernels::matvec_t(ds.x, u, a);
    for (double& v : a) v *= 2.0;

    std::vector<Candidate> cands;
    drop_candidates(active, signs, gamma_a, beta, lam, cands);
    for (std::size_t j = 0; j < p; ++j)
      if (!is_active[j] && j != barred) entry_candidates(j, c[j], a[j], lam, cands);

    const Vector gamma_full = expand_direction(active, gamma_a, p);

    if (cands.empty()) {
      for (std::size_t idx = 0; idx < active.size(); ++idx)
        beta[active[idx]] += lam * gamma_a[idx];
      out.record(0.0, lam, beta, gamma_full, PathEvent::terminal());
      return out.path;
    }

    const Candidate chosen = select_candidate(cands);
    const double lam_next = chosen.lambda;
    const double delta_lam = lam - lam_next;
    for (std::size_t idx = 0; idx < active.size(); ++idx)
      beta[active[idx]] += delta_lam * gamma_a[idx];
    refresh();

    if (chosen.event.kind == PathEventKind::drop) {
      const std::size_t j = chosen.event.index;
      beta[j] = 0.0;
      for (std::size_t idx = 0; idx < active.size(); ++idx)
        if (active[idx] == j) {
          active.erase(active.begin() + static_cast<std::ptrdiff_t>(idx));
          signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(idx));
          break;
        }
      is_active[j] = 0;
      barred = j;  // may not re-enter until one further event has passed
      refresh();
    } else {  // entry
      const std::size_t j = chosen.event.index;
      active.push_back(j);
      signs.push_back(c[j] >= 0.0 ? 1.0 : -1.0);
      is_active[j] = 1;
      barred = SIZE_MAX;
    }

    out.record(lam_next, delta_lam, beta, gamma_full, chosen.event);
    lam = lam_next;
  }
}

PiecewisePath huberized_lasso_path(const Dataset& ds, double delta) {
  ds.validate();
  if (ds.task != Task::regression)
    throw InvalidLabel("huberized_lasso_path: regression task required");
  if (!(delta > 0.0)) throw OutOfRange("huberized_lasso_path: delta must be positive");
  const std::size_t n = ds.n(), p = ds.p();
  const Loss loss = Loss::huber(delta);

  PathBuilder out;
  out.path.loss = loss;
  out.path.n_obs = n;
  out.path.feature_names = ds.feature_names;

  Vector beta(p, 0.0);
  // regime[i]: 0 quadratic (|r_i| <= delta, knot inclusive), +1/-1 linear side
  std::vector<std::int8_t> regime(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (ds.y[i] > delta)
      regime[i] = 1;
    else if (ds.y[i] < -delta)
      regime[i] = -1;
  }

  Vector fit(n), resid(n), psi(n), c;
  std::vector<std::uint8_t> quad_mask(n, 0);
  auto refresh = [&]() {
    kernels::matvec(ds.x, beta, fit);
    for (std::size_t i = 0; i < n; ++i) {
      resid[i] = ds.y[i] - fit[i];
      quad_mask[i] = (regime[i] == 0) ? 1 : 0;
      psi[i] = (regime[i] == 0) ? resid[i] : (regime[i] > 0 ? delta : -delta);
    }
    kernels::matvec_t(ds.x, psi, c);
    for (double& v : c) v *= 2.0;
  };
  refresh();

  double lam = linf_norm(c);
  if (lam <= 0.0) {
    out.record_first(0.0, beta, PathEvent::terminal());
    return out.path;
  }

  const std::size_t j0 = argmax_abs(c);
  out.record_first(lam, beta, PathEvent::entry(j0));

  std::vector<std::size_t> active{j0};
  Vector signs{c[j0] >= 0.0 ? 1.0 : -1.0};
  std::vector<std::uint8_t> is_active(p, 0);
  is_active[j0] = 1;
  std::size_t barred = SIZE_MAX;

  const std::size_t step_limit = 10 * p + 100;
  std::size_t events_processed = 1;

  // Exact homotopy broke down: report it, then let the proximal solver
  // supply the lambda ~ 0 endpoint so the path still spans the full range.
  auto degenerate_finish = [&](const std::string& why) -> PiecewisePath {
    const double lam_last = out.path.lambdas.back();
    out.path.diagnostic = why + "; exact homotopy stopped at lambda = " + std::to_string(lam_last);
    const double lam_f = 1e-10 * out.path.lambda_start();
    if (!(lam_f < lam_last)) {
      out.path.status = PathStatus::halted_degenerate;
      return out.path;
    }
    try {
      const Vector warm = out.path.betas.back();
      const SolveResult r = solve_l1(ds, loss, lam_f, OracleConfig{}, &warm);
      if (r.status != SolveStatus::converged) {
        out.path.status = PathStatus::halted_degenerate;
        out.path.diagnostic += "; endpoint solve did not converge";
        return out.path;
      }
      Vector secant(p, 0.0);
      for (std::size_t j = 0; j < p; ++j)
        secant[j] = (r.beta[j] - out.path.betas.back()[j]) / (lam_last - lam_f);
      out.path.lambdas.push_back(lam_f);
      out.path.betas.push_back(r.beta);
      out.path.events.push_back(PathEvent::terminal());
      out.path.directions.push_back(secant);
      out.path.status = PathStatus::degenerate_finish;
    } catch (const Error& e) {
      out.path.status = PathStatus::halted_degenerate;
      out.path.diagnostic += std::string("; endpoint solve failed: ") + e.what();
    }
    return out.path;
  };

  while (true) {
    if (++events_processed > step_limit)
      throw StepLimitExceeded("huberized_lasso_path: more than " + std::to_string(step_limit) +
                              " events");

    std::size_t quad_count = 0;
    for (std::size_t i = 0; i < n; ++i) quad_count += quad_mask[i];

    // Direction: solve 2 X_{Q,A}^T X_{Q,A} gamma = s_A with the Hessian
    // restricted to the quadratic-zone rows.
    Vector gamma_a;
    for (;;) {
      if (active.empty()) {
        gamma_a.clear();
        break;
      }
      Matrix gram;
      kernels::gram(ds.x, active, quad_mask, 2.0, gram);
      try {
        gamma_a = Cholesky::factor(gram).solve(signs);
      } catch (const NotPositiveDefinite&) {
        // Distinguish genuine column collinearity from a quadratic zone too
        // thin to support the active set.
        if (quad_count >= active.size()) {
          bool full_rank = true;
          Matrix full_gram;
          kernels::gram(ds.x, active, {}, 2.0, full_gram);
          try {
            (void)Cholesky::factor(full_gram);
          } catch (const NotPositiveDefinite&) {
            full_rank = false;
          }
          if (!full_rank)
            throw CollinearActiveSet("huberized_lasso_path: singular system for active set {" +
                                     index_list(active) + "}");
        }
        return degenerate_finish("quadratic zone of " + std::to_string(quad_count) +
                                 " observations cannot support active set {" + index_list(active) +
                                 "}");
      }
      std::size_t bad = SIZE_MAX;
      for (std::size_t idx = 0; idx < active.size(); ++idx)
        if (beta[active[idx]] == 0.0 && gamma_a[idx] * signs[idx] < -1e-12) {
          bad = idx;
          break;
        }
      if (bad == SIZE_MAX) break;
      const std::size_t j = active[bad];
      is_active[j] = 0;
      barred = j;
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(bad));
      signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(bad));
    }

    // Fitted-value velocity per unit decrease of lambda; residuals move as
    // r_i(lambda) = r_i - (lam - lambda) * u_i.
    Vector u, a;
    kernels::matvec_active(ds.x, active, gamma_a, u);
    kernels::matvec_t_masked(ds.x, u, quad_mask, a);
    for (double& v : a) v *= 2.0;

    std::vector<Candidate> cands;
    drop_candidates(active, signs, gamma_a, beta, lam, cands);
    for (std::size_t j = 0; j < p; ++j)
      if (!is_active[j] && j != barred) entry_candidates(j, c[j], a[j], lam, cands);

    // Residual crossings of the +-delta knots. A residual that slipped just
    // past its knot by roundoff (small negative step) flips immediately.
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0.0) continue;
      double step_to_knot;
      bool into_quadratic;
      if (regime[i] == 0) {
        // exits through the knot the residual is moving toward
        step_to_knot = (u[i] > 0.0) ? (resid[i] + delta) / u[i] : (resid[i] - delta) / u[i];
        into_quadratic = false;
      } else if (regime[i] > 0) {
        if (u[i] < 0.0) continue;  // moving further out
        step_to_knot = (resid[i] - delta) / u[i];
        into_quadratic = true;
      } else {
        if (u[i] > 0.0) continue;
        step_to_knot = (resid[i] + delta) / u[i];
        into_quadratic = true;
      }
      if (step_to_knot < -kTieEps) continue;
      const double l = std::min(lam - step_to_knot, lam);
      if (l > 0.0) cands.push_back({l, PathEvent::regime(i, into_quadratic)});
    }

    const Vector gamma_full = expand_direction(active, gamma_a, p);

    if (cands.empty()) {
      for (std::size_t idx = 0; idx < active.size(); ++idx)
        beta[active[idx]] += lam * gamma_a[idx];
      out.record(0.0, lam, beta, gamma_full, PathEvent::terminal());
      return out.path;
    }

    const Candidate chosen = select_candidate(cands);
    const double lam_next = chosen.lambda;
    const double delta_lam = lam - lam_next;
    for (std::size_t idx = 0; idx < active.size(); ++idx)
      beta[active[idx]] += delta_lam * gamma_a[idx];
    refresh();

    switch (chosen.event.kind) {
      case PathEventKind::drop: {
        const std::size_t j = chosen.event.index;
        beta[j] = 0.0;
        for (std::size_t idx = 0; idx < active.size(); ++idx)
          if (active[idx] == j) {
            active.erase(active.begin() + static_cast<std::ptrdiff_t>(idx));
            signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(idx));
            break;
          }
        is_active[j] = 0;
        barred = j;
        break;
      }
      case PathEventKind::regime_change: {
        const std::size_t i = chosen.event.index;
        if (chosen.event.into_quadratic)
          regime[i] = 0;
        else
          regime[i] = (resid[i] >= 0.0) ? 1 : -1;  // side of the knot just crossed
        barred = SIZE_MAX;
        break;
      }
      default: {  // entry
        const std::size_t j = chosen.event.index;
        active.push_back(j);
        signs.push_back(c[j] >= 0.0 ? 1.0 : -1.0);
        is_active[j] = 1;
        barred = SIZE_MAX;
        break;
      }
    }
    refresh();

    out.record(lam_next, delta_lam, beta, gamma_full, chosen.event);
    lam = lam_next;
  }
}

}  // namespace regpath
