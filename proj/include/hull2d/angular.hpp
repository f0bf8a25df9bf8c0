#pragma once

// Anchor selection, polar annotation, the angle sort, and the split at the
// farthest point -- the stages between the quadrilateral pretest and the
// second discard round.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include <thread>

#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"
#include "hull2d/parallel.hpp"

namespace hull2d {

// Columnar pipeline state. pts[0] is the anchor (lowest point); angle/dist2
// hold each point's polar key relative to it (angle[0] is a 0 sentinel,
// dist2[0] = 0). No two stored points are ever exactly equal.
struct AnnotatedBuffer {
    std::vector<Point2> pts;
    std::vector<double> angle;
    std::vector<double> dist2;

    std::size_t size() const { return pts.size(); }
};

// Index of the farthest-from-anchor point in a sorted buffer. The sorted
// order splits there: right region = [1, longest), left region = (longest, n)
// with the left walk starting from index n-1.
struct RegionSplit {
    std::size_t longest = 0;
};

// Lowest point: minimal y, ties by minimal x, then by lowest index.
inline std::size_t select_anchor(std::span<const Point2> points) {
    if (points.empty()) throw EmptyInput("select_anchor: no points");
    std::size_t best = 0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const Point2 p = points[i];
        const Point2 b = points[best];
        if (p.y < b.y || (p.y == b.y && p.x < b.x)) best = i;
    }
    return best;
}

namespace detail {

// Open-addressing set of exact point coordinates used for duplicate removal.
// Finite coordinates never carry a NaN bit pattern, so an all-ones word marks
// an empty slot; -0.0 is folded onto +0.0 before hashing so numerically equal
// points collide.
class CoordSet {
public:
    explicit CoordSet(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2) cap *= 2;
        slots_.assign(cap, Slot{kEmpty, kEmpty});
        mask_ = cap - 1;
    }

    // True if p was not present before.
    bool insert(Point2 p) {
        const std::uint64_t xb = bits(p.x);
        const std::uint64_t yb = bits(p.y);
        std::size_t i = mix(xb, yb) & mask_;
        for (;;) {
            Slot& s = slots_[i];
            if (s.x == kEmpty) {
                s.x = xb;
                s.y = yb;
                return true;
            }
            if (s.x == xb && s.y == yb) return false;
            i = (i + 1) & mask_;
        }
    }

    // Pull p's home slot toward the cache ahead of the probing insert.
    void prefetch(Point2 p) const {
        const std::size_t i = mix(bits(p.x), bits(p.y)) & mask_;
        __builtin_prefetch(&slots_[i], 1);
    }

private:
    struct Slot {
        std::uint64_t x, y;
    };
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};  // a NaN pattern

    static std::uint64_t bits(double v) {
        return std::bit_cast<std::uint64_t>(v == 0.0 ? 0.0 : v);
    }

    static std::size_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a ^ (b * 0x9e3779b97f4a7c15ULL);
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<std::size_t>(z);
    }

    std::vector<Slot> slots_;
    std::size_t mask_ = 0;
};

}  // namespace detail

// Moves the anchor to index 0, drops exact duplicates (first occurrence wins,
// input order otherwise preserved), and attaches each survivor's polar key.
// Deduplication is a sequential scan; the key map runs data-parallel.
inline AnnotatedBuffer annotate(std::span<const Point2> points, std::size_t anchor_index) {
    const Point2 anchor = points[anchor_index];
    AnnotatedBuffer buf;
    buf.pts.reserve(points.size());
    buf.pts.push_back(anchor);

    detail::CoordSet seen(points.size());
    seen.insert(anchor);
    constexpr std::size_t kBatch = 32;
    for (std::size_t base = 0; base < points.size(); base += kBatch) {
        const std::size_t end = std::min(base + kBatch, points.size());
        for (std::size_t i = base; i < end; ++i) seen.prefetch(points[i]);
        for (std::size_t i = base; i < end; ++i) {
            if (seen.insert(points[i])) buf.pts.push_back(points[i]);
        }
    }

    const std::size_t n = buf.pts.size();
    buf.angle.resize(n);
    buf.dist2.resize(n);
    buf.angle[0] = 0.0;
    buf.dist2[0] = 0.0;
    detail::split2(n - 1, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo + 1; i < hi + 1; ++i) {
            const PolarKey key = polar_key(anchor, buf.pts[i]);
            buf.angle[i] = key.angle;
            buf.dist2[i] = key.dist2;
        }
    });
    return buf;
}

// Sorts indices 1..n-1 by (angle, dist2) ascending; the permutation equals a
// stable sort on that composite key. The anchor stays at index 0. Large tails
// are sorted as two stably-sorted halves joined by a stable merge, which
// yields the exact stable-sort permutation independent of threading.
inline void sort_by_angle(AnnotatedBuffer& buf) {
    struct Entry {
        double angle, dist2;
        Point2 p;
    };
    const auto by_key = [](const Entry& a, const Entry& b) {
        return a.angle < b.angle || (a.angle == b.angle && a.dist2 < b.dist2);
    };

    const std::size_t n = buf.size();
    if (n < 3) return;
    std::vector<Entry> tail;
    tail.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) tail.push_back({buf.angle[i], buf.dist2[i], buf.pts[i]});

    if (tail.size() >= 2 * detail::kParallelGrain && detail::parallel_allowed()) {
        const std::size_t half_len = tail.size() / 2;
        const auto mid = tail.begin() + static_cast<std::ptrdiff_t>(half_len);
        std::thread half([&] { std::stable_sort(tail.begin(), mid, by_key); });
        std::stable_sort(mid, tail.end(), by_key);
        half.join();
        // stable merge of the runs straight into the columnar output;
        // ties take the left run first, matching a whole-range stable sort
        std::size_t a = 0, b = half_len;
        for (std::size_t out = 1; out < n; ++out) {
            const bool take_a = a < half_len && (b >= tail.size() || !by_key(tail[b], tail[a]));
            const Entry& e = take_a ? tail[a++] : tail[b++];
            buf.angle[out] = e.angle;
            buf.dist2[out] = e.dist2;
            buf.pts[out] = e.p;
        }
        return;
    }

    std::stable_sort(tail.begin(), tail.end(), by_key);
    for (std::size_t i = 1; i < n; ++i) {
        buf.angle[i] = tail[i - 1].angle;
        buf.dist2[i] = tail[i - 1].dist2;
        buf.pts[i] = tail[i - 1].p;
    }
}

// First index (>= 1) with maximal dist2.
inline RegionSplit split_regions(const AnnotatedBuffer& buf) {
    if (buf.size() < 2) throw TooFewPoints("split_regions: need at least 2 annotated points");
    std::size_t best = 1;
    for (std::size_t i = 2; i < buf.size(); ++i) {
        if (buf.dist2[i] > buf.dist2[best]) best = i;
    }
    return {best};
}

}  // namespace hull2d
