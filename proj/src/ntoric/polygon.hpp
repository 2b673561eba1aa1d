#pragma once

#include "ntoric/base.hpp"

#include <algorithm>

namespace ntoric {

// Exact 2D lattice polygon helpers. Points are integer pairs; polygons are
// given by their vertex sets and handled through convex-hull order.

inline Int cross2(const Vec& o, const Vec& a, const Vec& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Convex hull in counterclockwise order (monotone chain); collinear interior
// points are dropped.
inline std::vector<Vec> hull2(std::vector<Vec> pts)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2)
        return pts;
    std::vector<Vec> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Doubled euclidean area of a convex polygon in hull order; equals the
// normalized lattice area (primitive triangle = 1).
inline Int area2(const std::vector<Vec>& hull)
{
    Int a = 0;
    size_t n = hull.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec& p = hull[i];
        const Vec& q = hull[(i + 1) % n];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return abs(a);
}

inline Int boundary_lattice_points(const std::vector<Vec>& hull)
{
    Int b = 0;
    size_t n = hull.size();
    if (n == 1)
        return 1;
    if (n == 2)
        return content(sub(hull[1], hull[0])) + 1;
    for (size_t i = 0; i < n; ++i)
        b += content(sub(hull[(i + 1) % n], hull[i]));
    return b;
}

// point vs convex hull: +1 strictly inside, 0 on boundary, -1 outside
inline int side_of_hull(const std::vector<Vec>& hull, const Vec& p)
{
    size_t n = hull.size();
    if (n == 1)
        return p == hull[0] ? 0 : -1;
    if (n == 2) {
        if (cross2(hull[0], hull[1], p) != 0)
            return -1;
        Int t0 = dot(sub(p, hull[0]), sub(hull[1], hull[0]));
        Int t1 = dot(sub(hull[1], hull[0]), sub(hull[1], hull[0]));
        return (t0 >= 0 && t0 <= t1) ? 0 : -1;
    }
    bool on_edge = false;
    for (size_t i = 0; i < n; ++i) {
        Int c = cross2(hull[i], hull[(i + 1) % n], p);
        if (c < 0)
            return -1;
        if (c == 0)
            on_edge = true;
    }
    return on_edge ? 0 : 1;
}

inline std::vector<Vec> lattice_points_in_hull(const std::vector<Vec>& hull, bool interior_only)
{
    Int xlo = hull[0][0], xhi = hull[0][0], ylo = hull[0][1], yhi = hull[0][1];
    for (const Vec& v : hull) {
        xlo = std::min(xlo, v[0]);
        xhi = std::max(xhi, v[0]);
        ylo = std::min(ylo, v[1]);
        yhi = std::max(yhi, v[1]);
    }
    std::vector<Vec> out;
    for (Int x = xlo; x <= xhi; ++x)
        for (Int y = ylo; y <= yhi; ++y) {
            Vec p{x, y};
            int s = side_of_hull(hull, p);
            if (s > 0 || (!interior_only && s == 0))
                out.push_back(p);
        }
    return out;
}

inline Int interior_lattice_points(const std::vector<Vec>& hull)
{
    if (hull.size() <= 2)
        return 0;
    return Int(lattice_points_in_hull(hull, true).size());
}

} // namespace ntoric
