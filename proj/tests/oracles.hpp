// Independent reference computations for the tests. Nothing here calls into
// the library's geometry: hulls, areas and tropical maxima are recomputed by
// the most direct method available.
#pragma once

#include "tropix/scalar.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace ref {

using tropix::Scalar;
using tropix::Vec;

inline Vec v2(long x, long y)
{
    return {Scalar(x), Scalar(y)};
}

inline Scalar cross(const Vec& o, const Vec& a, const Vec& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Jarvis march, counter-clockwise, collinear points dropped.
inline std::vector<Vec> gift_wrap(std::vector<Vec> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Vec> hull;
    std::size_t start = 0; // lexicographically smallest
    std::size_t cur = start;
    do {
        hull.push_back(pts[cur]);
        std::size_t next = (cur + 1) % pts.size();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const Scalar c = cross(pts[cur], pts[next], pts[i]);
            auto d2 = [&](const Vec& p) -> Scalar {
                return (p[0] - pts[cur][0]) * (p[0] - pts[cur][0]) + (p[1] - pts[cur][1]) * (p[1] - pts[cur][1]);
            };
            if (c < 0 || (c == 0 && d2(pts[i]) > d2(pts[next])))
                next = i;
        }
        cur = next;
    } while (cur != start && hull.size() <= pts.size());
    if (hull.size() < 3) // all collinear: keep the two extremes
        return {pts.front(), pts.back()};
    return hull;
}

inline Scalar shoelace(const std::vector<Vec>& poly)
{
    if (poly.size() < 3)
        return 0;
    Scalar twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec& a = poly[i];
        const Vec& b = poly[(i + 1) % poly.size()];
        twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
}

/// area(A+B) − area(A) − area(B), with A+B formed from all pairwise sums.
inline Scalar mixed_area(const std::vector<Vec>& a, const std::vector<Vec>& b)
{
    std::vector<Vec> sums;
    for (const auto& p : a)
        for (const auto& q : b)
            sums.push_back({p[0] + q[0], p[1] + q[1]});
    return shoelace(gift_wrap(sums)) - shoelace(gift_wrap(a)) - shoelace(gift_wrap(b));
}

/// Weakly inside a ccw convex polygon (or on a segment/point).
inline bool polygon_contains(const std::vector<Vec>& hull, const Vec& x)
{
    if (hull.size() == 1)
        return hull[0] == x;
    if (hull.size() == 2) {
        if (cross(hull[0], hull[1], x) != 0)
            return false;
        return std::min(hull[0], hull[1]) <= x && x <= std::max(hull[0], hull[1]);
    }
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (cross(hull[i], hull[(i + 1) % hull.size()], x) < 0)
            return false;
    return true;
}

/// max over terms of c + ⟨u, v⟩ and how many terms attain it.
inline std::pair<Scalar, int> trop_max(const std::vector<std::pair<std::vector<int>, Scalar>>& terms, const Vec& v)
{
    Scalar best = 0;
    int count = 0;
    for (const auto& [u, c] : terms) {
        Scalar val = c;
        for (std::size_t i = 0; i < u.size(); ++i)
            val += Scalar(u[i]) * v[i];
        if (count == 0 || val > best) {
            best = val;
            count = 1;
        } else if (val == best) {
            ++count;
        }
    }
    return {best, count};
}

/// Random planar support in [0,3]^2 with integer tropical coefficients in [-5,5].
inline std::vector<std::pair<std::vector<int>, Scalar>> random_planar_terms(std::mt19937_64& rng, int min_terms = 2,
                                                                            int max_terms = 6)
{
    std::uniform_int_distribution<int> count(min_terms, max_terms), coord(0, 3), coeff(-5, 5);
    std::map<std::vector<int>, Scalar> terms;
    const int want = count(rng);
    while (static_cast<int>(terms.size()) < want)
        terms[{coord(rng), coord(rng)}] = coeff(rng);
    return {terms.begin(), terms.end()};
}

/// p-adic valuation by repeated division, for cross-checking.
inline long valuation(const Scalar& q, unsigned long p)
{
    mpz_class num = q.get_num(), den = q.get_den();
    long v = 0;
    while (num % p == 0) {
        num /= p;
        ++v;
    }
    while (den % p == 0) {
        den /= p;
        --v;
    }
    return v;
}

} // namespace ref
