#pragma once

#include <cmath>

#include "hull2d/errors.hpp"

namespace hull2d {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2&, const Point2&) = default;
};

enum class Turn { Left, Right, Collinear };

// Signed double area of the triangle (a, b, c); positive for a CCW triple.
constexpr double cross(Point2 a, Point2 b, Point2 c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Side of c relative to the directed line a->b. Plain double arithmetic with
// an exact zero threshold; every pipeline stage and oracle shares this
// predicate, so their results are comparable without tolerances.
constexpr Turn orient(Point2 a, Point2 b, Point2 c) {
    const double area = cross(a, b, c);
    if (area > 0.0) return Turn::Left;
    if (area < 0.0) return Turn::Right;
    return Turn::Collinear;
}

struct PolarKey {
    double angle;  // radians from the positive x-axis, [0, pi] when p is not below anchor
    double dist2;  // squared distance; only compared or argmaxed, never rooted
};

inline PolarKey polar_key(Point2 anchor, Point2 p) {
    if (p == anchor) throw CoincidentWithAnchor("polar_key: point coincides with anchor");
    const double dx = p.x - anchor.x;
    const double dy = p.y - anchor.y;
    return {std::atan2(dy, dx), dx * dx + dy * dy};
}

}  // namespace hull2d
