#include "regpath/serialize.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "regpath/errors.hpp"

namespace regpath {

using nlohmann::json;

std::string format_shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

std::vector<std::pair<double, Vector>> PathSamples::axis_points(const std::string& axis) const {
  std::vector<std::pair<double, Vector>> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    if (axis == "lambda") {
      if (!pt.lambda)
        throw OutOfRange("axis 'lambda' requested but a point has no lambda (kind: " + kind + ")");
      out.emplace_back(*pt.lambda, pt.beta);
    } else if (axis == "l1norm") {
      out.emplace_back(pt.l1norm, pt.beta);
    } else {
      throw OutOfRange("unknown axis '" + axis + "' (expected lambda|l1norm)");
    }
  }
  return out;
}

PathSamples to_samples(const PiecewisePath& path) {
  PathSamples s;
  s.kind = "path";
  s.loss = path.loss.name();
  if (path.loss.kind == LossKind::huber) s.delta = path.loss.delta;
  s.n = path.n_obs;
  s.p = path.p();
  s.feature_names = path.feature_names;
  s.status = to_string(path.status);
  s.diagnostic = path.diagnostic;
  for (std::size_t k = 0; k < path.breakpoint_count(); ++k) {
    SamplePoint pt;
    pt.lambda = path.lambdas[k];
    pt.l1norm = l1_norm(path.betas[k]);
    pt.event = path.events[k].str();
    pt.beta = path.betas[k];
    s.points.push_back(std::move(pt));
  }
  return s;
}

PathSamples to_samples(const GridPath& grid) {
  PathSamples s;
  s.kind = "grid";
  s.loss = grid.loss.name();
  if (grid.loss.kind == LossKind::huber) s.delta = grid.loss.delta;
  s.n = grid.n_obs;
  s.p = grid.p();
  s.feature_names = grid.feature_names;
  for (std::size_t k = 0; k < grid.lambdas.size(); ++k) {
    SamplePoint pt;
    pt.lambda = grid.lambdas[k];
    pt.l1norm = l1_norm(grid.betas[k]);
    pt.event = "grid";
    pt.beta = grid.betas[k];
    s.points.push_back(std::move(pt));
  }
  return s;
}

PathSamples to_samples(const BoostTrace& trace) {
  PathSamples s;
  s.kind = "trace";
  s.loss = trace.config.loss.name();
  if (trace.config.loss.kind == LossKind::huber) s.delta = trace.config.loss.delta;
  s.n = trace.n_obs;
  s.p = trace.n_features;
  s.feature_names = trace.feature_names;
  s.epsilon = trace.config.epsilon;
  s.steps = trace.config.steps;
  s.thin = trace.config.effective_thin();
  for (const auto& r : trace.records) {
    SamplePoint pt;
    pt.iter = r.iteration;
    if (r.coordinate != SIZE_MAX) pt.coordinate = r.coordinate + 1;  // 1-based on the wire
    pt.loss_value = r.total_loss;
    pt.l1norm = r.l1;
    pt.beta = r.beta;
    s.points.push_back(std::move(pt));
  }
  return s;
}

std::string samples_to_json(const PathSamples& s) {
  json header;
  header["kind"] = s.kind;
  header["loss"] = s.loss;
  if (s.delta) header["delta"] = *s.delta;
  header["n"] = s.n;
  header["p"] = s.p;
  header["feature_names"] = s.feature_names;
  if (s.epsilon) header["epsilon"] = *s.epsilon;
  if (s.steps) header["steps"] = *s.steps;
  if (s.thin) header["thin"] = *s.thin;
  if (s.status) header["status"] = *s.status;
  if (!s.diagnostic.empty()) header["diagnostic"] = s.diagnostic;

  json points = json::array();
  for (const auto& pt : s.points) {
    json jp;
    if (pt.lambda) jp["lambda"] = *pt.lambda;
    if (pt.iter) jp["iter"] = *pt.iter;
    if (pt.coordinate) jp["coordinate"] = *pt.coordinate;
    if (pt.loss_value) jp["loss"] = *pt.loss_value;
    jp["l1norm"] = pt.l1norm;
    if (!pt.event.empty()) jp["event"] = pt.event;
    jp["beta"] = pt.beta;
    points.push_back(std::move(jp));
  }

  json doc;
  doc["header"] = std::move(header);
  doc["points"] = std::move(points);
  return doc.dump(2) + "\n";
}

PathSamples samples_from_json(const std::string& text, const std::string& source_name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(source_name + ": invalid JSON: " + e.what());
  }
  try {
    PathSamples s;
    const json& header = doc.at("header");
    s.kind = header.at("kind").get<std::string>();
    s.loss = header.at("loss").get<std::string>();
    if (header.contains("delta")) s.delta = header["delta"].get<double>();
    s.n = header.at("n").get<std::size_t>();
    s.p = header.at("p").get<std::size_t>();
    s.feature_names = header.at("feature_names").get<std::vector<std::string>>();
    if (header.contains("epsilon")) s.epsilon = header["epsilon"].get<double>();
    if (header.contains("steps")) s.steps = header["steps"].get<std::size_t>();
    if (header.contains("thin")) s.thin = header["thin"].get<std::size_t>();
    if (header.contains("status")) s.status = header["status"].get<std::string>();
    if (header.contains("diagnostic")) s.diagnostic = header["diagnostic"].get<std::string>();

    for (const json& jp : doc.at("points")) {
      SamplePoint pt;
      if (jp.contains("lambda")) pt.lambda = jp["lambda"].get<double>();
      if (jp.contains("iter")) pt.iter = jp["iter"].get<std::size_t>();
      if (jp.contains("coordinate")) pt.coordinate = jp["coordinate"].get<std::size_t>();
      if (jp.contains("loss")) pt.loss_value = jp["loss"].get<double>();
      pt.l1norm = jp.at("l1norm").get<double>();
      if (jp.contains("event")) pt.event = jp["event"].get<std::string>();
      pt.beta = jp.at("beta").get<Vector>();
      if (pt.beta.size() != s.p)
        throw ParseError(source_name + ": point with " + std::to_string(pt.beta.size()) +
                         " coefficients, expected " + std::to_string(s.p));
      s.points.push_back(std::move(pt));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(source_name + ": malformed document: " + e.what());
  }
}

void write_samples_json(const PathSamples& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << samples_to_json(samples);
  if (!out) throw IoError("write to '" + path + "' failed");
}

PathSamples read_samples_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return samples_from_json(text, path);
}

void write_samples_csv(const PathSamples& s, std::ostream& out, const std::string& axis) {
  if (axis != "lambda" && axis != "l1norm")
    throw OutOfRange("unknown axis '" + axis + "' (expected lambda|l1norm)");
  const bool trace = (s.kind == "trace");
  out << axis << ',' << (trace ? "iter" : "event");
  for (std::size_t j = 1; j <= s.p; ++j) out << ",beta_" << j;
  out << '\n';
  for (const auto& pt : s.points) {
    if (axis == "lambda") {
      if (!pt.lambda) throw OutOfRange("axis 'lambda' requested but a point has no lambda");
      out << format_shortest(*pt.lambda);
    } else {
      out << format_shortest(pt.l1norm);
    }
    if (trace)
      out << ',' << (pt.iter ? std::to_string(*pt.iter) : "");
    else
      out << ',' << pt.event;
    for (double b : pt.beta) out << ',' << format_shortest(b);
    out << '\n';
  }
}

void write_samples_csv_file(const PathSamples& samples, const std::string& path,
                            const std::string& axis) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_samples_csv(samples, out, axis);
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace regpath
