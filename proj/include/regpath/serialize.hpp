#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "regpath/boosting.hpp"
#include "regpath/matrix.hpp"
#include "regpath/path.hpp"
#include "regpath/prox.hpp"

namespace regpath {

/// One serialized point of a path, grid, or boosting trace.
struct SamplePoint {
  std::optional<double> lambda;       // paths and grids
  std::optional<std::size_t> iter;    // traces
  std::optional<std::size_t> coordinate;
  std::optional<double> loss_value;
  double l1norm = 0.0;
  std::string event;  // empty for traces
  Vector beta;

  bool operator==(const SamplePoint&) const = default;
};

/// The on-disk form shared by every path-like object. This is what the
/// compare and emit tools consume; it intentionally carries no solver state
/// beyond the breakpoints themselves.
struct PathSamples {
  std::string kind;  // "path" | "grid" | "trace"
  std::string loss;
  std::optional<double> delta;
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<std::string> feature_names;

  std::optional<double> epsilon;      // traces
  std::optional<std::size_t> steps;   // traces
  std::optional<std::size_t> thin;    // traces
  std::optional<std::string> status;  // paths
  std::string diagnostic;

  std::vector<SamplePoint> points;

  bool operator==(const PathSamples&) const = default;

  /// (axis value, beta) pairs; axis is "lambda" or "l1norm". Throws when a
  /// point lacks the requested axis.
  std::vector<std::pair<double, Vector>> axis_points(const std::string& axis) const;
};

PathSamples to_samples(const PiecewisePath& path);
PathSamples to_samples(const GridPath& grid);
PathSamples to_samples(const BoostTrace& trace);

std::string samples_to_json(const PathSamples& samples);
PathSamples samples_from_json(const std::string& text, const std::string& source_name = "<json>");

void write_samples_json(const PathSamples& samples, const std::string& path);
PathSamples read_samples_json(const std::string& path);

/// CSV emission: first column is the chosen axis, second is the event (paths,
/// grids) or iteration (traces), then beta_1..beta_p.
void write_samples_csv(const PathSamples& samples, std::ostream& out, const std::string& axis);
void write_samples_csv_file(const PathSamples& samples, const std::string& path,
                            const std::string& axis);

std::string format_shortest(double v);

}  // namespace regpath
