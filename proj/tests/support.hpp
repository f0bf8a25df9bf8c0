#pragma once

// Helpers shared by the unit and acceptance suites.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hull2d/hull2d.hpp"

namespace support {

using hull2d::AnnotatedBuffer;
using hull2d::Hull;
using hull2d::Point2;
using hull2d::Turn;

inline AnnotatedBuffer sorted_buffer(std::span<const Point2> pts) {
    AnnotatedBuffer buf = hull2d::annotate(pts, hull2d::select_anchor(pts));
    hull2d::sort_by_angle(buf);
    return buf;
}

// Boundary-inclusive hull membership (the strict test lives in the oracle).
inline bool hull_contains(const Hull& h, Point2 p) {
    const auto& v = h.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return p == v[0];
    if (v.size() == 2) {
        if (hull2d::orient(v[0], v[1], p) != Turn::Collinear) return false;
        return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (hull2d::orient(v[i], v[(i + 1) % v.size()], p) == Turn::Right) return false;
    }
    return true;
}

inline bool strictly_in_triangle(Point2 a, Point2 b, Point2 c, Point2 p) {
    using hull2d::orient;
    return orient(a, b, p) == Turn::Left && orient(b, c, p) == Turn::Left &&
           orient(c, a, p) == Turn::Left;
}

// Integer-grid points: plenty of exact ties, duplicates, and collinear runs.
inline std::vector<Point2> gen_grid(std::size_t n, std::uint64_t seed, int lo = 0, int hi = 12) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(lo, hi);
    std::vector<Point2> pts(n);
    for (Point2& p : pts) {
        p.x = coord(rng);
        p.y = coord(rng);
    }
    return pts;
}

class TempFile {
public:
    explicit TempFile(std::string_view contents) {
        static const unsigned session = std::random_device{}();
        static std::atomic<unsigned> counter{0};
        const auto dir = std::filesystem::temp_directory_path();
        path_ = (dir / ("hull2d_test_" + std::to_string(session) + "_" +
                        std::to_string(counter.fetch_add(1)) + ".txt"))
                    .string();
        std::ofstream out(path_);
        out << contents;
    }

    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace support
