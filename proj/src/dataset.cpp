#include "regpath/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "regpath/errors.hpp"

namespace regpath {

void Dataset::validate() const {
  if (x.rows == 0 || x.cols == 0) throw DimensionMismatch("dataset: n and p must be at least 1");
  if (y.size() != x.rows) throw DimensionMismatch("dataset: response length does not match rows");
  if (!all_finite(x) || !all_finite(y)) throw NonFinite("dataset: non-finite entry");
  if (task == Task::binary) {
    for (std::size_t i = 0; i < y.size(); ++i)
      if (y[i] != 1.0 && y[i] != -1.0)
        throw LabelError("dataset: binary label at row " + std::to_string(i + 1) +
                         " is not -1 or +1");
  }
  if (!feature_names.empty() && feature_names.size() != x.cols)
    throw DimensionMismatch("dataset: feature name count does not match columns");
}

std::string Dataset::feature_name(std::size_t j) const {
  if (j < feature_names.size()) return feature_names[j];
  return "x" + std::to_string(j + 1);
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_cell(const std::string& cell, const std::string& source, std::size_t line_no,
                  const std::string& column) {
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  while (first < last && (*first == ' ' || *first == '\t')) ++first;
  while (last > first && (*(last - 1) == ' ' || *(last - 1) == '\t')) --last;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(source + ":" + std::to_string(line_no) + ": column '" + column +
                     "': cannot parse '" + cell + "' as a number");
  return value;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

CsvLoadResult load_csv(std::istream& in, const std::string& response_column, Task task,
                       const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line))
    throw ParseError(source_name + ": empty input, expected a header row");
  const std::vector<std::string> header = split_line(line);

  std::size_t response_idx = header.size();
  for (std::size_t j = 0; j < header.size(); ++j)
    if (header[j] == response_column) {
      response_idx = j;
      break;
    }
  if (response_idx == header.size())
    throw ParseError(source_name + ": response column '" + response_column +
                     "' not found in header");

  std::vector<std::string> feature_names;
  for (std::size_t j = 0; j < header.size(); ++j)
    if (j != response_idx) feature_names.push_back(header[j]);
  const std::size_t p = feature_names.size();
  if (p == 0) throw ParseError(source_name + ": no feature columns besides the response");

  std::vector<double> xvals;
  Vector y;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != header.size())
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const double v = parse_cell(cells[j], source_name, line_no, header[j]);
      if (j == response_idx)
        y.push_back(v);
      else
        xvals.push_back(v);
    }
  }
  const std::size_t n = y.size();
  if (n == 0) throw ParseError(source_name + ": no data rows");

  CsvLoadResult result;
  result.dataset.x = Matrix(n, p);
  result.dataset.x.data = std::move(xvals);
  result.dataset.y = std::move(y);
  result.dataset.task = task;
  result.dataset.feature_names = std::move(feature_names);

  if (task == Task::binary) {
    bool all01 = true, allpm1 = true;
    for (double v : result.dataset.y) {
      if (v != 0.0 && v != 1.0) all01 = false;
      if (v != -1.0 && v != 1.0) allpm1 = false;
    }
    if (allpm1) {
      // already in the -1/+1 convention
    } else if (all01) {
      for (double& v : result.dataset.y) v = (v == 1.0) ? 1.0 : -1.0;
      result.labels_remapped_from_01 = true;
    } else {
      for (std::size_t i = 0; i < result.dataset.y.size(); ++i) {
        const double v = result.dataset.y[i];
        if (v != 0.0 && v != 1.0 && v != -1.0)
          throw LabelError(source_name + ":" + std::to_string(i + 2) + ": label " +
                           format_double(v) + " is not binary (expected 0/1 or -1/+1)");
      }
      throw LabelError(source_name + ": labels mix the 0/1 and -1/+1 conventions");
    }
  }
  result.dataset.validate();
  return result;
}

CsvLoadResult load_csv_file(const std::string& path, const std::string& response_column,
                            Task task) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_csv(in, response_column, task, path);
}

void save_csv(const Dataset& ds, std::ostream& out, const std::string& response_column) {
  for (std::size_t j = 0; j < ds.p(); ++j) out << ds.feature_name(j) << ',';
  out << response_column << '\n';
  for (std::size_t i = 0; i < ds.n(); ++i) {
    for (std::size_t j = 0; j < ds.p(); ++j) out << format_double(ds.x(i, j)) << ',';
    out << format_double(ds.y[i]) << '\n';
  }
}

void save_csv_file(const Dataset& ds, const std::string& path,
                   const std::string& response_column) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  save_csv(ds, out, response_column);
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::pair<Vector, double> StandardizeTransform::to_original(const Vector& beta_std) const {
  Vector beta(beta_std.size());
  double intercept = 0.0;
  for (std::size_t j = 0; j < beta_std.size(); ++j) {
    beta[j] = beta_std[j] / scales[j];
    intercept -= means[j] * beta_std[j] / scales[j];
  }
  return {beta, intercept};
}

StandardizeResult standardize(const Dataset& ds, bool center, bool scale) {
  ds.validate();
  const std::size_t n = ds.n(), p = ds.p();
  StandardizeResult out;
  out.dataset = ds;
  out.transform.means.assign(p, 0.0);
  out.transform.scales.assign(p, 1.0);

  for (std::size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += ds.x(i, j);
    mean /= static_cast<double>(n);
    if (scale) {
      double ss = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double d = ds.x(i, j) - mean;
        ss += d * d;
      }
      const double sd = (n > 1) ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
      if (sd == 0.0)
        throw ConstantColumn("standardize: column '" + ds.feature_name(j) +
                             "' has zero variance, cannot scale");
      out.transform.scales[j] = sd;
    }
    if (center) out.transform.means[j] = mean;
    for (std::size_t i = 0; i < n; ++i)
      out.dataset.x(i, j) = (ds.x(i, j) - out.transform.means[j]) / out.transform.scales[j];
  }
  return out;
}

}  // namespace regpath
