#include "regpath/path.hpp"

#include <algorithm>
#include <functional>

#include "regpath/errors.hpp"

namespace regpath {

std::string PathEvent::str() const {
  switch (kind) {
    case PathEventKind::entry:
      return "entry:" + std::to_string(index + 1);
    case PathEventKind::drop:
      return "drop:" + std::to_string(index + 1);
    case PathEventKind::regime_change:
      return "regime:" + std::to_string(index + 1) + (into_quadratic ? ":quadratic" : ":linear");
    case PathEventKind::terminal:
      return "terminal";
    case PathEventKind::grid:
      return "grid";
  }
  return "?";
}

PathEvent PathEvent::parse(const std::string& s) {
  if (s == "terminal") return terminal();
  if (s == "grid") return grid();
  const auto colon = s.find(':');
  if (colon != std::string::npos) {
    const std::string head = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    if (head == "entry" || head == "drop") {
      const std::size_t idx = std::stoull(rest);
      if (idx == 0) throw ParseError("path event index must be 1-based: '" + s + "'");
      return head == "entry" ? entry(idx - 1) : drop(idx - 1);
    }
    if (head == "regime") {
      const auto colon2 = rest.find(':');
      if (colon2 != std::string::npos) {
        const std::size_t idx = std::stoull(rest.substr(0, colon2));
        const std::string zone = rest.substr(colon2 + 1);
        if (idx > 0 && (zone == "quadratic" || zone == "linear"))
          return regime(idx - 1, zone == "quadratic");
      }
    }
  }
  throw ParseError("unrecognized path event '" + s + "'");
}

std::string to_string(PathStatus s) {
  switch (s) {
    case PathStatus::complete:
      return "complete";
    case PathStatus::halted_rank_deficient:
      return "halted_rank_deficient";
    case PathStatus::degenerate_finish:
      return "degenerate_finish";
    case PathStatus::halted_degenerate:
      return "halted_degenerate";
  }
  return "?";
}

Vector evaluate_path(const PiecewisePath& path, double lambda) {
  if (path.lambdas.empty()) throw OutOfRange("evaluate_path: empty path");
  if (!(lambda >= path.lambda_end() && lambda <= path.lambda_start()))
    throw OutOfRange("evaluate_path: lambda " + std::to_string(lambda) + " outside [" +
                     std::to_string(path.lambda_end()) + ", " +
                     std::to_string(path.lambda_start()) + "]");
  // first index with lambdas[idx] <= lambda (lambdas are decreasing)
  const auto it =
      std::lower_bound(path.lambdas.begin(), path.lambdas.end(), lambda, std::greater<double>());
  const std::size_t idx = static_cast<std::size_t>(it - path.lambdas.begin());
  if (idx < path.lambdas.size() && path.lambdas[idx] == lambda) return path.betas[idx];
  const std::size_t k = idx - 1;  // segment [lambdas[k+1], lambdas[k]]
  const double gap = path.lambdas[k] - lambda;
  Vector beta = path.betas[k];
  const Vector& dir = path.directions[k];
  for (std::size_t j = 0; j < beta.size(); ++j) beta[j] += gap * dir[j];
  return beta;
}

}  // namespace regpath
