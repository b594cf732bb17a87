#pragma once

#include <string>
#include <utility>
#include <vector>

#include "regpath/matrix.hpp"

namespace regpath {

/// Coefficient discrepancies between two paths matched along a shared axis.
struct DiscrepancyReport {
  std::size_t matched_points = 0;
  double sup = 0.0;   // max over matched points of the per-point sup norm
  double mean = 0.0;  // mean of the per-point sup norms
  std::string axis;   // "lambda" or "l1norm"
  Vector per_coordinate_max;
};

using AxisPoints = std::vector<std::pair<double, Vector>>;

/// Match every point of A whose axis value lies inside B's range against B,
/// interpolating linearly between B's bracketing points. Throws EmptyOverlap
/// when the ranges are disjoint.
DiscrepancyReport compare_along_axis(const AxisPoints& a, const AxisPoints& b,
                                     const std::string& axis);

/// compare_along_axis with s = |beta|_1 as the axis.
DiscrepancyReport compare_by_norm(const AxisPoints& a, const AxisPoints& b);

}  // namespace regpath
