#include <doctest.h>

#include <sstream>

#include "regpath/boosting.hpp"
#include "regpath/errors.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"
#include "regpath/serialize.hpp"
#include "test_support.hpp"

using namespace regpath;

TEST_CASE("path JSON round-trips to an equal object and identical bytes") {
  const Dataset ds = testing::random_regression(44, 22, 6);
  const PiecewisePath path = huberized_lasso_path(ds, 2.0);
  const PathSamples samples = to_samples(path);
  CHECK(samples.points.size() == path.breakpoint_count());
  CHECK(samples.kind == "path");
  CHECK(samples.loss == "huber");
  CHECK(samples.delta == 2.0);

  const std::string text = samples_to_json(samples);
  const PathSamples back = samples_from_json(text);
  CHECK(back == samples);
  CHECK(samples_to_json(back) == text);
}

TEST_CASE("grid and trace serialization carry their identifying fields") {
  const Dataset ds = testing::random_regression(45, 20, 4);
  const double lm = lambda_max(ds, Loss::squared());
  const GridPath grid = solve_grid(ds, Loss::squared(), log_spaced(lm, lm * 0.1, 5));
  const PathSamples gs = to_samples(grid);
  CHECK(gs.kind == "grid");
  CHECK(gs.points.size() == 5);
  for (const auto& pt : gs.points) CHECK(pt.event == "grid");
  CHECK(samples_from_json(samples_to_json(gs)) == gs);

  BoostConfig bc;
  bc.loss = Loss::squared();
  bc.epsilon = 0.05;
  bc.steps = 40;
  bc.thin = 10;
  const BoostTrace trace = boost(ds, bc);
  const PathSamples ts = to_samples(trace);
  CHECK(ts.kind == "trace");
  CHECK(ts.epsilon == 0.05);
  CHECK(ts.steps == 40);
  REQUIRE(ts.points.size() == trace.records.size());
  CHECK(ts.points.front().iter == 0);
  CHECK_FALSE(ts.points.front().coordinate.has_value());
  CHECK(samples_from_json(samples_to_json(ts)) == ts);
}

TEST_CASE("csv emission: axis column is recomputable from the coefficients") {
  const Dataset ds = testing::random_regression(46, 18, 3);
  const PiecewisePath path = lasso_path(ds);
  const PathSamples samples = to_samples(path);

  std::ostringstream out;
  write_samples_csv(samples, out, "l1norm");
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "l1norm,event,beta_1,beta_2,beta_3");

  std::string line;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    // first cell re-derivable as |beta|_1
    const auto first_comma = line.find(',');
    const double axis_value = std::stod(line.substr(0, first_comma));
    CHECK(axis_value == doctest::Approx(samples.points[rows].l1norm).epsilon(1e-14));
    ++rows;
  }
  CHECK(rows == path.breakpoint_count());

  std::ostringstream out2;
  write_samples_csv(samples, out2, "lambda");
  std::istringstream lines2(out2.str());
  std::getline(lines2, header);
  CHECK(header == "lambda,event,beta_1,beta_2,beta_3");
}

TEST_CASE("malformed documents raise ParseError with the source name") {
  CHECK_THROWS_AS(samples_from_json("not json at all", "x.json"), ParseError);
  CHECK_THROWS_AS(samples_from_json("{\"header\": {}}", "x.json"), ParseError);
  try {
    samples_from_json("{", "broken.json");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
}

TEST_CASE("axis extraction enforces the axis the points actually carry") {
  const Dataset ds = testing::random_regression(47, 15, 3);
  BoostConfig bc;
  bc.loss = Loss::squared();
  bc.epsilon = 0.05;
  bc.steps = 10;
  const PathSamples ts = to_samples(boost(ds, bc));
  CHECK_THROWS_AS(ts.axis_points("lambda"), OutOfRange);
  CHECK(ts.axis_points("l1norm").size() == ts.points.size());
  CHECK_THROWS_AS(ts.axis_points("bogus"), OutOfRange);
}
