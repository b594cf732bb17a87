#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "regpath/matrix.hpp"

namespace regpath {

enum class Task { regression, binary };

/// Design matrix plus response. Binary tasks carry labels in {-1, +1}.
/// Immutable by convention once built; safe to share across threads.
struct Dataset {
  Matrix x;  // n x p
  Vector y;  // length n
  Task task = Task::regression;
  std::vector<std::string> feature_names;  // empty means x1..xp

  std::size_t n() const { return x.rows; }
  std::size_t p() const { return x.cols; }

  /// Checks finiteness, dimensions, and the +-1 label convention.
  void validate() const;

  std::string feature_name(std::size_t j) const;
};

struct CsvLoadResult {
  Dataset dataset;
  bool labels_remapped_from_01 = false;  // binary 0/1 input was remapped to -1/+1
};

/// Parse a CSV stream: one header row, numeric cells, response column picked
/// by name. Binary labels may come in as 0/1 (remapped, reported) or -1/+1.
CsvLoadResult load_csv(std::istream& in, const std::string& response_column, Task task,
                       const std::string& source_name = "<stream>");
CsvLoadResult load_csv_file(const std::string& path, const std::string& response_column, Task task);

/// Write the dataset in the same format: features in order, response last.
/// Numbers are written in shortest round-trip form.
void save_csv(const Dataset& ds, std::ostream& out, const std::string& response_column = "y");
void save_csv_file(const Dataset& ds, const std::string& path,
                   const std::string& response_column = "y");

/// Per-column affine transform applied by standardize(); enough to map
/// fitted coefficients back to the original scale.
struct StandardizeTransform {
  Vector means;   // subtracted (zeros when centering was off)
  Vector scales;  // divided by (ones when scaling was off)

  /// Coefficients on the standardized scale -> (coefficients, intercept
  /// offset) on the original scale, so x^t beta_std on standardized data
  /// equals x_orig^t beta_orig + intercept.
  std::pair<Vector, double> to_original(const Vector& beta_std) const;
};

struct StandardizeResult {
  Dataset dataset;
  StandardizeTransform transform;
};

/// Center columns to mean zero and/or scale to unit sample standard
/// deviation (n-1 denominator). Throws ConstantColumn when asked to scale a
/// zero-variance column.
StandardizeResult standardize(const Dataset& ds, bool center, bool scale);

}  // namespace regpath
