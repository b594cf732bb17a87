#include "regpath/compare.hpp"

#include <algorithm>
#include <cmath>

#include "regpath/errors.hpp"

namespace regpath {

DiscrepancyReport compare_along_axis(const AxisPoints& a, const AxisPoints& b,
                                     const std::string& axis) {
  if (a.empty() || b.empty()) throw OutOfRange("compare: point lists must be nonempty");
  const std::size_t p = a.front().second.size();
  for (const auto& [s, beta] : a)
    if (beta.size() != p) throw DimensionMismatch("compare: ragged coefficient vectors in A");
  for (const auto& [s, beta] : b)
    if (beta.size() != p) throw DimensionMismatch("compare: B coefficient length differs from A");

  AxisPoints sorted_b = b;
  std::stable_sort(sorted_b.begin(), sorted_b.end(),
                   [](const auto& l, const auto& r) { return l.first < r.first; });
  const double b_lo = sorted_b.front().first;
  const double b_hi = sorted_b.back().first;

  DiscrepancyReport report;
  report.axis = axis;
  report.per_coordinate_max.assign(p, 0.0);

  double sum = 0.0;
  for (const auto& [s, beta_a] : a) {
    if (s < b_lo || s > b_hi) continue;
    // bracketing pair in B
    const auto it = std::lower_bound(sorted_b.begin(), sorted_b.end(), s,
                                     [](const auto& pt, double v) { return pt.first < v; });
    Vector interp(p);
    if (it != sorted_b.end() && it->first == s) {
      interp = it->second;
    } else {
      const auto hi = it;
      const auto lo = it - 1;
      const double width = hi->first - lo->first;
      if (width <= 0.0) {
        interp = lo->second;
      } else {
        const double t = (s - lo->first) / width;
        for (std::size_t j = 0; j < p; ++j)
          interp[j] = lo->second[j] + t * (hi->second[j] - lo->second[j]);
      }
    }
    double point_sup = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
      const double d = std::fabs(beta_a[j] - interp[j]);
      point_sup = std::max(point_sup, d);
      report.per_coordinate_max[j] = std::max(report.per_coordinate_max[j], d);
    }
    report.sup = std::max(report.sup, point_sup);
    sum += point_sup;
    ++report.matched_points;
  }

  if (report.matched_points == 0)
    throw EmptyOverlap("compare: no point of A falls inside B's axis range [" +
                       std::to_string(b_lo) + ", " + std::to_string(b_hi) + "]");
  report.mean = sum / static_cast<double>(report.matched_points);
  return report;
}

DiscrepancyReport compare_by_norm(const AxisPoints& a, const AxisPoints& b) {
  return compare_along_axis(a, b, "l1norm");
}

}  // namespace regpath
