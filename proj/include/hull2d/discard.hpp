#pragma once

// Round 2: walk each angle-sorted region once, flagging points that are
// provably interior. A point checked against the walk state `temp` and found
// strictly on the inner side of the line temp -> longest lies strictly inside
// the triangle (anchor, temp, longest), because the angle sort already places
// it between temp and longest as seen from the anchor.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "hull2d/angular.hpp"
#include "hull2d/errors.hpp"
#include "hull2d/prefilter.hpp"

namespace hull2d {

// Number of independent consecutive slices each region is cut into. A slice's
// walk never reads outside its own range, so more slices mean cheaper
// parallel work but weaker discarding.
struct ChunkConfig {
    std::size_t chunk_count = 1024;
};

namespace detail {

inline constexpr std::size_t kNoWitness = std::numeric_limits<std::size_t>::max();

// Ascending walk over [first, last) with state starting at `seed`. A point
// strictly left of temp -> longest is interior; any other point becomes the
// new temp. `witness` (optional) records the temp in effect when a point was
// flagged.
inline void walk_right(const AnnotatedBuffer& buf, std::size_t longest, std::size_t seed,
                       std::size_t first, std::size_t last, KeepFlags& flags,
                       std::vector<std::size_t>* witness) {
    const Point2 pl = buf.pts[longest];
    std::size_t temp = seed;
    for (std::size_t i = first; i < last; ++i) {
        if (orient(buf.pts[temp], pl, buf.pts[i]) == Turn::Left) {
            flags[i] = 0;
            if (witness) (*witness)[i] = temp;
        } else {
            temp = i;
        }
    }
}

// Descending mirror over [lo, hi], highest index first: interior points are
// strictly right of temp -> longest. Requires lo >= 1.
inline void walk_left(const AnnotatedBuffer& buf, std::size_t longest, std::size_t seed,
                      std::size_t hi, std::size_t lo, KeepFlags& flags,
                      std::vector<std::size_t>* witness) {
    const Point2 pl = buf.pts[longest];
    std::size_t temp = seed;
    for (std::size_t i = hi; i >= lo; --i) {
        if (orient(buf.pts[temp], pl, buf.pts[i]) == Turn::Right) {
            flags[i] = 0;
            if (witness) (*witness)[i] = temp;
        } else {
            temp = i;
        }
    }
}

inline void check_longest_index(std::size_t longest, std::size_t n) {
    if (longest < 1 || longest >= n)
        throw IndexOutOfRange("discard: longest index must be in [1, n-1]");
}

}  // namespace detail

// Single-threaded walk of both regions. Right region: i = 1..longest-1 with
// temp starting at the anchor. Left region: i = n-2 down to longest+1 with
// temp starting at index n-1. The anchor, the longest point, and index n-1
// are never flagged.
inline KeepFlags discard_sequential(const AnnotatedBuffer& buf, std::size_t longest,
                                    std::vector<std::size_t>* witness = nullptr) {
    const std::size_t n = buf.size();
    detail::check_longest_index(longest, n);
    KeepFlags flags(n, 1);
    if (witness) witness->assign(n, detail::kNoWitness);
    if (longest >= 2) detail::walk_right(buf, longest, 0, 1, longest, flags, witness);
    if (longest + 2 <= n - 1) detail::walk_left(buf, longest, n - 1, n - 2, longest + 1, flags, witness);
    return flags;
}

// Same walk run independently per slice of ceil(m / chunk_count) consecutive
// region elements. Each slice's temp starts at its first element in walk
// order, which is therefore never flagged. chunk_count = 1 reproduces
// discard_sequential exactly: the left region's first walk element is n-1
// (the sequential seed), and the right region's first element can never be
// flagged against the anchor because it carries the minimal angle.
inline KeepFlags discard_chunked(const AnnotatedBuffer& buf, std::size_t longest,
                                 ChunkConfig cfg = {}) {
    const std::size_t n = buf.size();
    if (cfg.chunk_count == 0) throw ZeroChunks("discard_chunked: chunk_count must be positive");
    detail::check_longest_index(longest, n);
    KeepFlags flags(n, 1);

    // Right region: indices 1..longest-1, ascending.
    const std::size_t m_right = longest - 1;
    if (m_right > 1) {
        const std::size_t step = (m_right + cfg.chunk_count - 1) / cfg.chunk_count;
        for (std::size_t begin = 1; begin < longest; begin += step) {
            const std::size_t end = std::min(begin + step, longest);
            detail::walk_right(buf, longest, begin, begin + 1, end, flags, nullptr);
        }
    }

    // Left region: indices longest+1..n-1, walked from n-1 downward.
    const std::size_t m_left = n - 1 - longest;
    if (m_left > 1) {
        const std::size_t step = (m_left + cfg.chunk_count - 1) / cfg.chunk_count;
        for (std::size_t pos = 0; pos < m_left; pos += step) {
            const std::size_t seed = n - 1 - pos;
            const std::size_t lo = n - 1 - std::min(pos + step - 1, m_left - 1);
            if (seed > lo) detail::walk_left(buf, longest, seed, seed - 1, lo, flags, nullptr);
        }
    }
    return flags;
}

// Removes flagged points; survivors keep their sorted relative order, anchor
// stays at index 0.
inline AnnotatedBuffer stable_compact(const AnnotatedBuffer& buf,
                                      std::span<const std::uint8_t> flags) {
    if (flags.size() != buf.size())
        throw LengthMismatch("stable_compact: flag count does not match buffer size");
    AnnotatedBuffer out;
    const auto kept =
        static_cast<std::size_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
    out.pts.reserve(kept);
    out.angle.reserve(kept);
    out.dist2.reserve(kept);
    for (std::size_t i = 0; i < buf.size(); ++i) {
        if (!flags[i]) continue;
        out.pts.push_back(buf.pts[i]);
        out.angle.push_back(buf.angle[i]);
        out.dist2.push_back(buf.dist2[i]);
    }
    return out;
}

}  // namespace hull2d
