#include "regpath/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "regpath/boosting.hpp"
#include "regpath/errors.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"

namespace regpath {

using nlohmann::json;

namespace {

double median(Vector v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return (v.size() % 2 == 1) ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Breakpoint closest to the generating coefficients, in L2.
std::pair<double, Vector> oracle_pick(const PiecewisePath& path, const Vector& beta_true) {
  double best_err = std::numeric_limits<double>::infinity();
  std::size_t best_k = 0;
  for (std::size_t k = 0; k < path.breakpoint_count(); ++k) {
    double err = 0.0;
    for (std::size_t j = 0; j < beta_true.size(); ++j) {
      const double d = path.betas[k][j] - beta_true[j];
      err += d * d;
    }
    err = std::sqrt(err);
    if (err < best_err) {
      best_err = err;
      best_k = k;
    }
  }
  return {path.lambdas[best_k], path.betas[best_k]};
}

double l2_err(const Vector& a, const Vector& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double d = a[j] - b[j];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace

HuberLassoReport run_huber_vs_lasso(const HuberLassoConfig& cfg) {
  if (cfg.seeds.empty()) throw OutOfRange("run_huber_vs_lasso: seed list must be nonempty");
  HuberLassoReport report;
  report.config = cfg;
  report.per_seed.resize(cfg.seeds.size());

  Vector beta_true(cfg.sim.p, 0.0);
  beta_true[0] = cfg.sim.signal;

  const std::int64_t count = static_cast<std::int64_t>(cfg.seeds.size());
  // Seeds are independent; each works on its own dataset and stream.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < count; ++k) {
    HuberLassoSeedResult& row = report.per_seed[static_cast<std::size_t>(k)];
    row.seed = cfg.seeds[static_cast<std::size_t>(k)];
    try {
      ContaminatedSimConfig sim = cfg.sim;
      sim.seed = row.seed;
      const Dataset ds = simulate_contaminated(sim);

      const PiecewisePath huber = huberized_lasso_path(ds, cfg.delta);
      const PiecewisePath lasso = lasso_path(ds);

      const auto [hl, hbeta] = oracle_pick(huber, beta_true);
      const auto [ll, lbeta] = oracle_pick(lasso, beta_true);
      row.huber_lambda = hl;
      row.lasso_lambda = ll;
      row.huber_beta1 = hbeta[0];
      row.lasso_beta1 = lbeta[0];
      row.huber_err = l2_err(hbeta, beta_true);
      row.lasso_err = l2_err(lbeta, beta_true);
      row.huber_wins = row.huber_err < row.lasso_err;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }

  Vector huber_b1, lasso_b1, huber_errs, lasso_errs;
  for (const auto& row : report.per_seed) {
    if (!row.error.empty()) continue;
    ++report.valid_seeds;
    if (row.huber_wins) ++report.huber_wins;
    huber_b1.push_back(std::fabs(row.huber_beta1 - cfg.sim.signal));
    lasso_b1.push_back(std::fabs(row.lasso_beta1 - cfg.sim.signal));
    huber_errs.push_back(row.huber_err);
    lasso_errs.push_back(row.lasso_err);
  }
  if (report.valid_seeds > 0)
    report.win_rate =
        static_cast<double>(report.huber_wins) / static_cast<double>(report.valid_seeds);
  report.huber_median_beta1_abs_err = median(huber_b1);
  report.lasso_median_beta1_abs_err = median(lasso_b1);
  report.huber_median_err = median(huber_errs);
  report.lasso_median_err = median(lasso_errs);
  return report;
}

BoostEquivReport run_boost_equivalence(const BoostEquivConfig& cfg) {
  BoostEquivReport report;
  report.config = cfg;

  const Dataset ds = simulate_binary(cfg.sim);
  const Loss loss = Loss::binomial_deviance();

  BoostConfig bc;
  bc.epsilon = cfg.epsilon;
  bc.steps = cfg.steps;
  bc.thin = cfg.thin;
  bc.loss = loss;
  const BoostTrace trace = boost(ds, bc);

  report.lambda_max = lambda_max(ds, loss);
  const Vector grid_lambdas =
      log_spaced(report.lambda_max, report.lambda_max * cfg.grid_floor_factor, cfg.grid_points);
  const GridPath grid = solve_grid(ds, loss, grid_lambdas);

  AxisPoints a, b;
  for (std::size_t k = 0; k < grid.lambdas.size(); ++k)
    a.emplace_back(l1_norm(grid.betas[k]), grid.betas[k]);
  for (const auto& r : trace.records) b.emplace_back(r.l1, r.beta);
  for (const auto& [s, beta] : a) report.grid_max_norm = std::max(report.grid_max_norm, s);
  report.trace_max_norm = trace.max_recorded_l1();

  report.discrepancy = compare_by_norm(a, b);
  return report;
}

namespace {

json to_json(const DiscrepancyReport& r) {
  json j;
  j["matched_points"] = r.matched_points;
  j["sup"] = r.sup;
  j["mean"] = r.mean;
  j["axis"] = r.axis;
  j["per_coordinate_max"] = r.per_coordinate_max;
  return j;
}

}  // namespace

std::string report_to_json(const DiscrepancyReport& report) {
  return to_json(report).dump(2) + "\n";
}

std::string report_to_json(const HuberLassoReport& report) {
  json cfg;
  cfg["experiment"] = "huber-lasso";
  cfg["n"] = report.config.sim.n;
  cfg["p"] = report.config.sim.p;
  cfg["signal"] = report.config.sim.signal;
  cfg["inlier_sd"] = report.config.sim.inlier_sd;
  cfg["outlier_sd"] = report.config.sim.outlier_sd;
  cfg["outlier_prob"] = report.config.sim.outlier_prob;
  cfg["delta"] = report.config.delta;
  cfg["seeds"] = report.config.seeds;

  json rows = json::array();
  for (const auto& row : report.per_seed) {
    json r;
    r["seed"] = row.seed;
    if (!row.error.empty()) {
      r["error"] = row.error;
    } else {
      r["huber_beta1"] = row.huber_beta1;
      r["lasso_beta1"] = row.lasso_beta1;
      r["huber_err"] = row.huber_err;
      r["lasso_err"] = row.lasso_err;
      r["huber_lambda"] = row.huber_lambda;
      r["lasso_lambda"] = row.lasso_lambda;
      r["huber_wins"] = row.huber_wins;
    }
    rows.push_back(std::move(r));
  }

  json agg;
  agg["valid_seeds"] = report.valid_seeds;
  agg["huber_wins"] = report.huber_wins;
  agg["win_rate"] = report.win_rate;
  agg["huber_median_beta1_abs_err"] = report.huber_median_beta1_abs_err;
  agg["lasso_median_beta1_abs_err"] = report.lasso_median_beta1_abs_err;
  agg["huber_median_err"] = report.huber_median_err;
  agg["lasso_median_err"] = report.lasso_median_err;

  json doc;
  doc["config"] = std::move(cfg);
  doc["per_seed"] = std::move(rows);
  doc["aggregate"] = std::move(agg);
  return doc.dump(2) + "\n";
}

std::string report_to_json(const BoostEquivReport& report) {
  json cfg;
  cfg["experiment"] = "boost-equiv";
  cfg["n"] = report.config.sim.n;
  cfg["p"] = report.config.sim.p;
  cfg["true_beta"] = report.config.sim.true_beta;
  cfg["seed"] = report.config.sim.seed;
  cfg["epsilon"] = report.config.epsilon;
  cfg["steps"] = report.config.steps;
  cfg["grid_points"] = report.config.grid_points;
  cfg["grid_floor_factor"] = report.config.grid_floor_factor;

  json seed_row;
  seed_row["seed"] = report.config.sim.seed;
  seed_row["sup"] = report.discrepancy.sup;
  seed_row["mean"] = report.discrepancy.mean;
  seed_row["matched_points"] = report.discrepancy.matched_points;

  json agg = to_json(report.discrepancy);
  agg["lambda_max"] = report.lambda_max;
  agg["grid_max_norm"] = report.grid_max_norm;
  agg["trace_max_norm"] = report.trace_max_norm;

  json doc;
  doc["config"] = std::move(cfg);
  doc["per_seed"] = json::array({seed_row});
  doc["aggregate"] = std::move(agg);
  return doc.dump(2) + "\n";
}

}  // namespace regpath
