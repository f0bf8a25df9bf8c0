#pragma once

// Seeded dataset generators (uniform square, uniform disk, on-circle) and the
// two text loaders (plain XY, OBJ vertex projection). Generators are pure
// functions of (n, seed); repeated calls agree bit for bit.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"

namespace hull2d::datagen {

enum class DatasetKind { square, disk, circle, file };

struct DatasetSpec {
    DatasetKind kind = DatasetKind::square;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string path;  // kind == file
    bool obj = false;  // kind == file: OBJ vertex projection instead of plain XY
};

inline std::vector<Point2> gen_square(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2> pts(n);
    for (Point2& p : pts) {
        p.x = unit(rng);
        p.y = unit(rng);
    }
    return pts;
}

inline std::vector<Point2> gen_disk(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2> pts(n);
    for (Point2& p : pts) {
        const double r = std::sqrt(unit(rng));  // sqrt keeps the density uniform over area
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        p.x = r * std::cos(theta);
        p.y = r * std::sin(theta);
    }
    return pts;
}

// n points on the unit circle at distinct random angles (duplicate angles are
// resampled), so every output point is a hull vertex.
inline std::vector<Point2> gen_circle(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::unordered_set<double> used;
    used.reserve(2 * n);
    std::vector<Point2> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const double theta = 2.0 * std::numbers::pi * unit(rng);
        if (!used.insert(theta).second) continue;
        pts.push_back({std::cos(theta), std::sin(theta)});
    }
    return pts;
}

// Exactly collinear integer-grid points along a random line; duplicates are
// possible and intentional. Degenerate-hull stress input for verification.
inline std::vector<Point2> gen_collinear(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(-8, 8);
    std::uniform_int_distribution<int> param(-1000, 1000);
    const double ox = small(rng);
    const double oy = small(rng);
    int dx = small(rng);
    int dy = small(rng);
    if (dx == 0 && dy == 0) dx = 1;
    std::vector<Point2> pts(n);
    for (Point2& p : pts) {
        const double t = param(rng);
        p.x = ox + t * dx;
        p.y = oy + t * dy;
    }
    return pts;
}

namespace detail {

inline const char* skip_ws(const char* p, const char* end) {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    return p;
}

inline bool parse_double(const char*& p, const char* end, double& out) {
    const auto res = std::from_chars(p, end, out);
    if (res.ec != std::errc{}) return false;
    p = res.ptr;
    return true;
}

}  // namespace detail

// Plain-XY stream: one point per line, two reals separated by whitespace.
// '#'-prefixed and blank lines are ignored.
inline std::vector<Point2> load_points(std::istream& in, const std::string& name) {
    std::vector<Point2> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        p = detail::skip_ws(p, end);
        if (p == end || *p == '#') continue;
        Point2 pt;
        if (!detail::parse_double(p, end, pt.x)) throw ParseError("bad x coordinate", line_no);
        p = detail::skip_ws(p, end);
        if (!detail::parse_double(p, end, pt.y)) throw ParseError("bad y coordinate", line_no);
        p = detail::skip_ws(p, end);
        if (p != end) throw ParseError("trailing characters", line_no);
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y))
            throw ParseError("non-finite coordinate", line_no);
        pts.push_back(pt);
    }
    if (in.bad()) throw IoError("read error on " + name);
    if (pts.empty()) throw EmptyInput("no points in " + name);
    return pts;
}

inline std::vector<Point2> load_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_points(in, path);
}

// OBJ subset: every line whose first token is "v" contributes its first two
// numeric fields as (x, y); z and anything after it are ignored, as are all
// other line types ("vt", "vn", "f", ...).
inline std::vector<Point2> load_obj_projected(std::istream& in, const std::string& name) {
    std::vector<Point2> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        p = detail::skip_ws(p, end);
        if (p == end || p[0] != 'v') continue;
        if (p + 1 != end && p[1] != ' ' && p[1] != '\t') continue;
        p = detail::skip_ws(p + 1, end);
        Point2 pt;
        if (!detail::parse_double(p, end, pt.x)) throw ParseError("bad vertex x", line_no);
        p = detail::skip_ws(p, end);
        if (!detail::parse_double(p, end, pt.y)) throw ParseError("bad vertex y", line_no);
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y))
            throw ParseError("non-finite vertex coordinate", line_no);
        pts.push_back(pt);
    }
    if (in.bad()) throw IoError("read error on " + name);
    if (pts.empty()) throw EmptyInput("no vertex lines in " + name);
    return pts;
}

inline std::vector<Point2> load_obj_projected(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_obj_projected(in, path);
}

inline std::vector<Point2> materialize(const DatasetSpec& spec) {
    switch (spec.kind) {
        case DatasetKind::square: return gen_square(spec.n, spec.seed);
        case DatasetKind::disk: return gen_disk(spec.n, spec.seed);
        case DatasetKind::circle: return gen_circle(spec.n, spec.seed);
        case DatasetKind::file:
            return spec.obj ? load_obj_projected(spec.path) : load_points(spec.path);
    }
    throw Error("materialize: unknown dataset kind");
}

inline std::string dataset_label(const DatasetSpec& spec) {
    switch (spec.kind) {
        case DatasetKind::square: return "square";
        case DatasetKind::disk: return "disk";
        case DatasetKind::circle: return "circle";
        case DatasetKind::file: return spec.path;
    }
    return "?";
}

}  // namespace hull2d::datagen
