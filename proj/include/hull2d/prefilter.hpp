#pragma once

// Round 1: drop every point that is provably inside the quadrilateral spanned
// by the four axis-extreme points.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"
#include "hull2d/parallel.hpp"

namespace hull2d {

// Per-point marker: 1 = kept (exterior or undecided), 0 = proven interior.
using KeepFlags = std::vector<std::uint8_t>;

// Indices of the axis-extreme points; ties resolve to the lowest index.
struct ExtremeQuad {
    std::size_t i_minx = 0;
    std::size_t i_miny = 0;
    std::size_t i_maxx = 0;
    std::size_t i_maxy = 0;
};

inline ExtremeQuad find_extremes(std::span<const Point2> points) {
    if (points.empty()) throw EmptyInput("find_extremes: no points");
    ExtremeQuad q;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Point2 p = points[i];
        if (p.x < points[q.i_minx].x) q.i_minx = i;
        if (p.y < points[q.i_miny].y) q.i_miny = i;
        if (p.x > points[q.i_maxx].x) q.i_maxx = i;
        if (p.y > points[q.i_maxy].y) q.i_maxy = i;
    }
    return q;
}

// Flags a point 0 iff it lies strictly left of all four directed edges of the
// quadrilateral (minx, miny, maxx, maxy) -- that vertex order is CCW whenever
// the four points are distinct. Boundary points stay kept. A degenerate
// quadrilateral (coincident extreme vertices, e.g. collinear input) has a
// zero-length edge whose orient() is Collinear for every point, so nothing is
// flagged; no special casing is needed.
inline KeepFlags classify_quad(std::span<const Point2> points, const ExtremeQuad& quad) {
    const Point2 q0 = points[quad.i_minx];
    const Point2 q1 = points[quad.i_miny];
    const Point2 q2 = points[quad.i_maxx];
    const Point2 q3 = points[quad.i_maxy];
    KeepFlags flags(points.size(), 1);
    detail::split2(points.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const Point2 p = points[i];
            if (orient(q0, q1, p) == Turn::Left && orient(q1, q2, p) == Turn::Left &&
                orient(q2, q3, p) == Turn::Left && orient(q3, q0, p) == Turn::Left) {
                flags[i] = 0;
            }
        }
    });
    return flags;
}

// Keeps exactly the flag-1 points, preserving their relative order.
inline std::vector<Point2> compact(std::span<const Point2> points,
                                   std::span<const std::uint8_t> flags) {
    if (points.size() != flags.size())
        throw LengthMismatch("compact: flag count does not match point count");
    std::vector<Point2> kept;
    kept.reserve(static_cast<std::size_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1})));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (flags[i]) kept.push_back(points[i]);
    }
    return kept;
}

}  // namespace hull2d
