#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regpath/boosting.hpp"
#include "regpath/compare.hpp"
#include "regpath/dataset.hpp"
#include "regpath/errors.hpp"
#include "regpath/experiments.hpp"
#include "regpath/loss.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"
#include "regpath/serialize.hpp"
#include "regpath/simulate.hpp"

namespace {

using namespace regpath;

Vector parse_double_list(const std::string& spec, const std::string& what) {
  Vector out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) throw OutOfRange(what + ": empty entry in '" + spec + "'");
    try {
      out.push_back(std::stod(cur));
    } catch (const std::exception&) {
      throw OutOfRange(what + ": cannot parse '" + cur + "' as a number");
    }
    cur.clear();
  };
  for (char ch : spec) {
    if (ch == ',')
      flush();
    else
      cur.push_back(ch);
  }
  flush();
  return out;
}

// log:START:STOP:COUNT or an explicit comma-separated list.
Vector parse_lambda_spec(const std::string& spec) {
  if (spec.rfind("log:", 0) == 0) {
    const std::string rest = spec.substr(4);
    const auto c1 = rest.find(':');
    const auto c2 = (c1 == std::string::npos) ? std::string::npos : rest.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw OutOfRange("--lambdas: expected log:START:STOP:COUNT, got '" + spec + "'");
    try {
      const double start = std::stod(rest.substr(0, c1));
      const double stop = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
      const std::size_t count = std::stoull(rest.substr(c2 + 1));
      return log_spaced(start, stop, count);
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      throw OutOfRange("--lambdas: cannot parse '" + spec + "'");
    }
  }
  Vector lambdas = parse_double_list(spec, "--lambdas");
  return lambdas;
}

double path_kkt_max(const Dataset& ds, const PiecewisePath& path) {
  double worst = 0.0;
  for (std::size_t k = 0; k < path.breakpoint_count(); ++k)
    worst = std::max(worst, kkt_residual(ds, path.loss, path.lambdas[k], path.betas[k]));
  return worst;
}

Loss loss_from_flags(const std::string& token, double delta, bool delta_given) {
  if (token == "huber" && !delta_given)
    throw OutOfRange("--delta is required with --loss huber");
  return Loss::parse(token, delta);
}

Task task_for_loss(const Loss& loss) {
  return loss.margin_based() ? Task::binary : Task::regression;
}

struct SimContaminatedArgs {
  ContaminatedSimConfig cfg;
  std::string out;
};

struct SimBinaryArgs {
  BinarySimConfig cfg;
  std::string beta_spec;
  std::string out;
};

int run(int argc, char** argv) {
  CLI::App app{"exact L1 regularization paths, epsilon-boosting, and path comparison"};
  app.require_subcommand(1);

  // ---- simulate ----
  auto* simulate = app.add_subcommand("simulate", "generate a synthetic dataset as CSV");
  simulate->require_subcommand(1);

  SimContaminatedArgs sc;
  auto* sim_cont = simulate->add_subcommand(
      "contaminated", "regression with a normal-mixture noise (heavy-tailed contamination)");
  sim_cont->add_option("--n", sc.cfg.n, "observations")->capture_default_str();
  sim_cont->add_option("--p", sc.cfg.p, "predictors")->capture_default_str();
  sim_cont->add_option("--signal", sc.cfg.signal, "coefficient on the first predictor")
      ->capture_default_str();
  sim_cont->add_option("--inlier-sd", sc.cfg.inlier_sd, "sd of the inlier noise component")
      ->capture_default_str();
  sim_cont->add_option("--outlier-sd", sc.cfg.outlier_sd, "sd of the outlier noise component")
      ->capture_default_str();
  sim_cont->add_option("--outlier-prob", sc.cfg.outlier_prob, "outlier probability")
      ->capture_default_str();
  sim_cont->add_option("--seed", sc.cfg.seed, "random seed")->required();
  sim_cont->add_option("--out", sc.out, "output CSV path")->required();

  SimBinaryArgs sb;
  auto* sim_bin = simulate->add_subcommand("binary", "logistic-model +-1 labels");
  sim_bin->add_option("--n", sb.cfg.n, "observations")->capture_default_str();
  sim_bin->add_option("--p", sb.cfg.p, "predictors")->capture_default_str();
  sim_bin->add_option("--beta", sb.beta_spec, "true coefficients, comma separated")->required();
  sim_bin->add_option("--seed", sb.cfg.seed, "random seed")->required();
  sim_bin->add_option("--out", sb.out, "output CSV path")->required();

  // ---- path ----
  std::string path_loss = "squared", path_data, path_out, path_response = "y";
  std::string path_csv_out, path_axis = "lambda";
  double path_delta = 0.0;
  auto* path_cmd = app.add_subcommand("path", "exact piecewise-linear coefficient path");
  path_cmd->add_option("--loss", path_loss, "squared|huber")->capture_default_str();
  auto* path_delta_opt = path_cmd->add_option("--delta", path_delta, "Huber knot");
  path_cmd->add_option("--data", path_data, "input CSV")->required();
  path_cmd->add_option("--response", path_response, "response column name")->capture_default_str();
  path_cmd->add_option("--out", path_out, "output JSON path")->required();
  path_cmd->add_option("--csv-out", path_csv_out, "also emit breakpoints as CSV");
  path_cmd->add_option("--axis", path_axis, "first CSV column: lambda|l1norm")
      ->capture_default_str();

  // ---- boost ----
  std::string boost_loss, boost_data, boost_out, boost_response = "y";
  std::string boost_csv_out, boost_axis = "l1norm";
  double boost_delta = 0.0, boost_eps = 0.0;
  std::size_t boost_steps = 0, boost_thin = 0;
  auto* boost_cmd = app.add_subcommand("boost", "epsilon-boosting coordinate descent");
  boost_cmd->add_option("--loss", boost_loss, "squared|huber|hinge|exp|logistic")->required();
  auto* boost_delta_opt = boost_cmd->add_option("--delta", boost_delta, "Huber knot");
  boost_cmd->add_option("--epsilon", boost_eps, "step size")->required();
  boost_cmd->add_option("--steps", boost_steps, "iteration count")->required();
  boost_cmd->add_option("--thin", boost_thin, "record every k-th iterate (default steps/1000)");
  boost_cmd->add_option("--data", boost_data, "input CSV")->required();
  boost_cmd->add_option("--response", boost_response, "response column name")
      ->capture_default_str();
  boost_cmd->add_option("--out", boost_out, "output JSON path")->required();
  boost_cmd->add_option("--csv-out", boost_csv_out, "also emit the trace as CSV");
  boost_cmd->add_option("--axis", boost_axis, "first CSV column: l1norm")->capture_default_str();

  // ---- grid ----
  std::string grid_loss, grid_data, grid_out, grid_response = "y", grid_lambdas;
  std::string grid_csv_out, grid_axis = "lambda";
  double grid_delta = 0.0;
  auto* grid_cmd = app.add_subcommand("grid", "penalized solutions on a fixed lambda grid");
  grid_cmd->add_option("--loss", grid_loss, "squared|huber|exp|logistic")->required();
  auto* grid_delta_opt = grid_cmd->add_option("--delta", grid_delta, "Huber knot");
  grid_cmd->add_option("--lambdas", grid_lambdas, "log:START:STOP:COUNT or comma list")
      ->required();
  grid_cmd->add_option("--data", grid_data, "input CSV")->required();
  grid_cmd->add_option("--response", grid_response, "response column name")->capture_default_str();
  grid_cmd->add_option("--out", grid_out, "output JSON path")->required();
  grid_cmd->add_option("--csv-out", grid_csv_out, "also emit grid points as CSV");
  grid_cmd->add_option("--axis", grid_axis, "first CSV column: lambda|l1norm")
      ->capture_default_str();

  // ---- compare ----
  std::string cmp_a, cmp_b, cmp_axis = "l1norm", cmp_out;
  auto* cmp_cmd = app.add_subcommand("compare", "match two serialized paths along an axis");
  cmp_cmd->add_option("--a", cmp_a, "first path/grid/trace JSON")->required();
  cmp_cmd->add_option("--b", cmp_b, "second path/grid/trace JSON")->required();
  cmp_cmd->add_option("--axis", cmp_axis, "lambda|l1norm")->capture_default_str();
  cmp_cmd->add_option("--out", cmp_out, "output report JSON")->required();

  // ---- experiment ----
  auto* exp_cmd = app.add_subcommand("experiment", "canned experiment drivers");
  exp_cmd->require_subcommand(1);
  std::string exp_hl_config, exp_hl_out;
  auto* exp_hl = exp_cmd->add_subcommand("huber-lasso",
                                         "Huberized Lasso vs Lasso on contaminated data");
  exp_hl->add_option("--config", exp_hl_config, "config JSON")->required();
  exp_hl->add_option("--out", exp_hl_out, "output report JSON")->required();
  std::string exp_be_config, exp_be_out;
  auto* exp_be = exp_cmd->add_subcommand("boost-equiv",
                                         "boosting trace vs exact logistic path");
  exp_be->add_option("--config", exp_be_config, "config JSON")->required();
  exp_be->add_option("--out", exp_be_out, "output report JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (sim_cont->parsed()) {
    const Dataset ds = simulate_contaminated(sc.cfg);
    save_csv_file(ds, sc.out);
    std::printf("simulate contaminated: n=%zu p=%zu seed=%llu -> %s\n", ds.n(), ds.p(),
                static_cast<unsigned long long>(sc.cfg.seed), sc.out.c_str());
    return 0;
  }
  if (sim_bin->parsed()) {
    sb.cfg.true_beta = parse_double_list(sb.beta_spec, "--beta");
    if (sb.cfg.true_beta.size() != sb.cfg.p) sb.cfg.p = sb.cfg.true_beta.size();
    const Dataset ds = simulate_binary(sb.cfg);
    save_csv_file(ds, sb.out);
    std::printf("simulate binary: n=%zu p=%zu seed=%llu -> %s\n", ds.n(), ds.p(),
                static_cast<unsigned long long>(sb.cfg.seed), sb.out.c_str());
    return 0;
  }
  if (path_cmd->parsed()) {
    if (path_loss != "squared" && path_loss != "huber")
      throw OutOfRange("path: --loss must be squared or huber");
    const Loss loss = loss_from_flags(path_loss, path_delta, !path_delta_opt->empty());
    const Dataset ds = load_csv_file(path_data, path_response, Task::regression).dataset;
    const PiecewisePath path =
        (loss.kind == LossKind::huber) ? huberized_lasso_path(ds, loss.delta) : lasso_path(ds);
    const PathSamples samples = to_samples(path);
    write_samples_json(samples, path_out);
    if (!path_csv_out.empty()) write_samples_csv_file(samples, path_csv_out, path_axis);
    std::printf("path %s: %zu breakpoints, lambda %.6g -> %.6g, kkt_max %.3g, status %s -> %s\n",
                loss.name().c_str(), path.breakpoint_count(), path.lambda_start(),
                path.lambda_end(), path_kkt_max(ds, path), to_string(path.status).c_str(),
                path_out.c_str());
    return 0;
  }
  if (boost_cmd->parsed()) {
    BoostConfig bc;
    bc.loss = loss_from_flags(boost_loss, boost_delta, !boost_delta_opt->empty());
    bc.epsilon = boost_eps;
    bc.steps = boost_steps;
    bc.thin = boost_thin;
    const CsvLoadResult loaded = load_csv_file(boost_data, boost_response, task_for_loss(bc.loss));
    if (loaded.labels_remapped_from_01)
      std::fprintf(stderr, "note: 0/1 labels in %s remapped to -1/+1\n", boost_data.c_str());
    const BoostTrace trace = boost(loaded.dataset, bc);
    const PathSamples samples = to_samples(trace);
    write_samples_json(samples, boost_out);
    if (!boost_csv_out.empty()) write_samples_csv_file(samples, boost_csv_out, boost_axis);
    std::printf(
        "boost %s: %zu iterations (%zu recorded), final l1 %.6g, final loss %.6g%s -> %s\n",
        bc.loss.name().c_str(), trace.iterations_run, trace.records.size(),
        trace.records.back().l1, trace.records.back().total_loss,
        trace.stopped_at_stationary ? ", stopped at stationary point" : "", boost_out.c_str());
    return 0;
  }
  if (grid_cmd->parsed()) {
    const Loss loss = loss_from_flags(grid_loss, grid_delta, !grid_delta_opt->empty());
    const Vector lambdas = parse_lambda_spec(grid_lambdas);
    const CsvLoadResult loaded = load_csv_file(grid_data, grid_response, task_for_loss(loss));
    if (loaded.labels_remapped_from_01)
      std::fprintf(stderr, "note: 0/1 labels in %s remapped to -1/+1\n", grid_data.c_str());
    const GridPath grid = solve_grid(loaded.dataset, loss, lambdas);
    double kkt_max = 0.0;
    for (double k : grid.kkt_residuals) kkt_max = std::max(kkt_max, k);
    const PathSamples samples = to_samples(grid);
    write_samples_json(samples, grid_out);
    if (!grid_csv_out.empty()) write_samples_csv_file(samples, grid_csv_out, grid_axis);
    std::printf("grid %s: %zu points, lambda %.6g -> %.6g, kkt_max %.3g -> %s\n",
                loss.name().c_str(), grid.lambdas.size(), grid.lambdas.front(),
                grid.lambdas.back(), kkt_max, grid_out.c_str());
    return 0;
  }
  if (cmp_cmd->parsed()) {
    const PathSamples a = read_samples_json(cmp_a);
    const PathSamples b = read_samples_json(cmp_b);
    const DiscrepancyReport report =
        compare_along_axis(a.axis_points(cmp_axis), b.axis_points(cmp_axis), cmp_axis);
    std::ofstream out(cmp_out, std::ios::binary);
    if (!out) throw IoError("cannot open '" + cmp_out + "' for writing");
    out << report_to_json(report);
    std::printf("compare %s: %zu matched, sup %.6g, mean %.6g -> %s\n", cmp_axis.c_str(),
                report.matched_points, report.sup, report.mean, cmp_out.c_str());
    return 0;
  }
  if (exp_hl->parsed()) {
    std::ifstream in(exp_hl_config);
    if (!in) throw IoError("cannot open '" + exp_hl_config + "' for reading");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(exp_hl_config + ": invalid JSON: " + e.what());
    }
    HuberLassoConfig cfg;
    cfg.sim.n = j.value("n", cfg.sim.n);
    cfg.sim.p = j.value("p", cfg.sim.p);
    cfg.sim.signal = j.value("signal", cfg.sim.signal);
    cfg.sim.inlier_sd = j.value("inlier_sd", cfg.sim.inlier_sd);
    cfg.sim.outlier_sd = j.value("outlier_sd", cfg.sim.outlier_sd);
    cfg.sim.outlier_prob = j.value("outlier_prob", cfg.sim.outlier_prob);
    cfg.delta = j.value("delta", cfg.delta);
    if (!j.contains("seeds")) throw ParseError(exp_hl_config + ": missing 'seeds' array");
    cfg.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    const HuberLassoReport report = run_huber_vs_lasso(cfg);
    std::ofstream out(exp_hl_out, std::ios::binary);
    if (!out) throw IoError("cannot open '" + exp_hl_out + "' for writing");
    out << report_to_json(report);
    std::printf(
        "experiment huber-lasso: %zu seeds, huber wins %zu/%zu (%.0f%%), huber median |beta1 - "
        "%.6g| = %.4g -> %s\n",
        cfg.seeds.size(), report.huber_wins, report.valid_seeds, 100.0 * report.win_rate,
        cfg.sim.signal, report.huber_median_beta1_abs_err, exp_hl_out.c_str());
    return 0;
  }
  if (exp_be->parsed()) {
    std::ifstream in(exp_be_config);
    if (!in) throw IoError("cannot open '" + exp_be_config + "' for reading");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(exp_be_config + ": invalid JSON: " + e.what());
    }
    BoostEquivConfig cfg;
    cfg.sim.n = j.value("n", cfg.sim.n);
    if (!j.contains("true_beta")) throw ParseError(exp_be_config + ": missing 'true_beta' array");
    cfg.sim.true_beta = j["true_beta"].get<Vector>();
    cfg.sim.p = j.value("p", cfg.sim.true_beta.size());
    cfg.sim.seed = j.value("seed", cfg.sim.seed);
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.steps = j.value("steps", cfg.steps);
    cfg.thin = j.value("thin", cfg.thin);
    cfg.grid_points = j.value("grid_points", cfg.grid_points);
    cfg.grid_floor_factor = j.value("grid_floor_factor", cfg.grid_floor_factor);
    const BoostEquivReport report = run_boost_equivalence(cfg);
    std::ofstream out(exp_be_out, std::ios::binary);
    if (!out) throw IoError("cannot open '" + exp_be_out + "' for writing");
    out << report_to_json(report);
    std::printf(
        "experiment boost-equiv: sup %.6g over %zu matched points (eps=%g, T=%zu) -> %s\n",
        report.discrepancy.sup, report.discrepancy.matched_points, cfg.epsilon, cfg.steps,
        exp_be_out.c_str());
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const regpath::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.category()) {
      case regpath::ErrorCategory::invalid_input:
        return 2;
      case regpath::ErrorCategory::numerical:
        return 3;
      case regpath::ErrorCategory::io:
        return 4;
    }
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
