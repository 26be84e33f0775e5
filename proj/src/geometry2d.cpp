#include "tropix/geometry2d.hpp"

#include "tropix/errors.hpp"

#include <algorithm>

namespace tropix::planar {

namespace {

Scalar cross(const Vec& o, const Vec& a, const Vec& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

} // namespace

std::vector<Vec> convex_hull(std::vector<Vec> points)
{
    for (const auto& p : points)
        if (p.size() != 2)
            throw DimensionMismatch("convex_hull expects planar points");
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2)
        return points;

    // Andrew's monotone chain.
    std::vector<Vec> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0)
            --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

Scalar hull_area(const std::vector<Vec>& points)
{
    const auto hull = convex_hull(points);
    if (hull.size() < 3)
        return 0;
    Scalar twice = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Vec& a = hull[i];
        const Vec& b = hull[(i + 1) % hull.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

std::vector<Vec> minkowski_sum(const std::vector<Vec>& a, const std::vector<Vec>& b)
{
    std::vector<Vec> sums;
    for (const auto& x : a)
        for (const auto& y : b)
            sums.push_back(add(x, y));
    return convex_hull(std::move(sums));
}

Vec rotate_ccw(const Vec& d)
{
    return {-d[1], d[0]};
}

} // namespace tropix::planar
