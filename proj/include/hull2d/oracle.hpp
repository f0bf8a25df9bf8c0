#pragma once

// Reference hulls the pipeline is verified against. They stay independent of
// the pipeline stages; the only shared code is the orient() predicate, which
// keeps vertex-set comparisons free of tolerances.

#include <algorithm>
#include <span>
#include <vector>

#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"
#include "hull2d/pipeline.hpp"

namespace hull2d::oracle {

namespace detail {

inline bool lex_less(Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline bool lowest_less(Point2 a, Point2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
}

// Rotate a CCW ring so it starts at the lowest vertex (min y, tie min x).
inline void canonicalize(std::vector<Point2>& ring) {
    std::size_t start = 0;
    for (std::size_t i = 1; i < ring.size(); ++i) {
        if (lowest_less(ring[i], ring[start])) start = i;
    }
    std::rotate(ring.begin(), ring.begin() + static_cast<std::ptrdiff_t>(start), ring.end());
}

}  // namespace detail

// Andrew's monotone chain. Strict vertices only, CCW, canonical start at the
// lowest point; degenerate inputs give one or two vertices.
inline Hull monotone_chain(std::span<const Point2> points) {
    if (points.empty()) throw EmptyInput("monotone_chain: no points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), detail::lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t n = pts.size();
    if (n == 1) return Hull{{pts[0]}};

    std::vector<Point2> ring;
    ring.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {  // lower chain, left to right
        const Point2 p = pts[i];
        while (ring.size() >= 2 && orient(ring[ring.size() - 2], ring.back(), p) != Turn::Left)
            ring.pop_back();
        ring.push_back(p);
    }
    const std::size_t lower = ring.size();
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain, right to left
        const Point2 p = pts[i];
        while (ring.size() > lower && orient(ring[ring.size() - 2], ring.back(), p) != Turn::Left)
            ring.pop_back();
        ring.push_back(p);
    }
    ring.pop_back();  // closing point repeats ring[0]

    detail::canonicalize(ring);
    return Hull{std::move(ring)};
}

// O(n^3) edge enumeration, deliberately unrelated to the chain construction.
// (a, b) is a CCW hull edge iff no point lies strictly right of a -> b and
// every collinear point falls within the closed segment; the accepted edges
// are then stitched into the cycle.
inline Hull brute_force_hull(std::span<const Point2> points, std::size_t cap = 64) {
    if (points.empty()) throw EmptyInput("brute_force_hull: no points");
    if (points.size() > cap) throw TooLarge("brute_force_hull: input exceeds cap");

    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), detail::lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n == 1) return Hull{{pts[0]}};

    const auto within_segment = [](Point2 a, Point2 b, Point2 c) {
        return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
    };

    constexpr std::size_t kNone = ~std::size_t{0};
    std::vector<std::size_t> succ(n, kNone);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool edge = true;
            for (std::size_t k = 0; k < n && edge; ++k) {
                if (k == i || k == j) continue;
                const Turn t = orient(pts[i], pts[j], pts[k]);
                if (t == Turn::Right) edge = false;
                if (t == Turn::Collinear && !within_segment(pts[i], pts[j], pts[k])) edge = false;
            }
            if (edge) {
                succ[i] = j;
                break;
            }
        }
    }

    std::size_t start = kNone;
    for (std::size_t i = 0; i < n; ++i) {
        if (succ[i] == kNone) continue;
        if (start == kNone || detail::lowest_less(pts[i], pts[start])) start = i;
    }
    if (start == kNone) throw Error("brute_force_hull: no hull edge found");

    std::vector<Point2> ring;
    std::size_t cur = start;
    do {
        ring.push_back(pts[cur]);
        cur = succ[cur];
    } while (cur != start && cur != kNone && ring.size() <= n);
    return Hull{std::move(ring)};
}

// True iff p is strictly left of every CCW edge. Hulls with fewer than three
// vertices have no interior.
inline bool strictly_inside_hull(const Hull& hull, Point2 p) {
    const auto& v = hull.vertices;
    if (v.size() < 3) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (orient(v[i], v[(i + 1) % v.size()], p) != Turn::Left) return false;
    }
    return true;
}

inline bool same_vertex_set(const Hull& a, const Hull& b) {
    auto sorted = [](const Hull& h) {
        std::vector<Point2> v = h.vertices;
        std::sort(v.begin(), v.end(), detail::lex_less);
        return v;
    };
    return sorted(a) == sorted(b);
}

}  // namespace hull2d::oracle
