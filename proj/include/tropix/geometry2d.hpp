#pragma once

#include "tropix/linalg.hpp"

#include <vector>

namespace tropix::planar {

/// Convex hull of planar points, counter-clockwise, without collinear points.
/// Degenerate inputs give one or two points.
std::vector<Vec> convex_hull(std::vector<Vec> points);

/// Euclidean area of the convex hull.
Scalar hull_area(const std::vector<Vec>& points);

/// Vertices of the Minkowski sum conv(a) + conv(b).
std::vector<Vec> minkowski_sum(const std::vector<Vec>& a, const std::vector<Vec>& b);

/// (x, y) ↦ (−y, x).
Vec rotate_ccw(const Vec& d);

} // namespace tropix::planar
