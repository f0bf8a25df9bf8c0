#pragma once

// Graham finalization and the end-to-end pipeline: quadrilateral pretest,
// polar annotation, angle sort, region discard, stack scan.

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

#include "hull2d/angular.hpp"
#include "hull2d/discard.hpp"
#include "hull2d/errors.hpp"
#include "hull2d/geom.hpp"
#include "hull2d/prefilter.hpp"

namespace hull2d {

// CCW sequence of strict extreme vertices starting at the anchor (lowest
// point). Collinear boundary points are excluded; a degenerate input yields
// one vertex (single point) or two (collinear set).
struct Hull {
    std::vector<Point2> vertices;

    std::size_t size() const { return vertices.size(); }
};

struct StageStats {
    std::size_t n_input = 0;
    std::size_t n_after_round1 = 0;
    std::size_t n_after_round2 = 0;
    std::size_t hull_size = 0;
    double t_round1_ms = 0.0;
    double t_annotate_ms = 0.0;
    double t_sort_ms = 0.0;
    double t_round2_ms = 0.0;
    double t_finalize_ms = 0.0;
    double t_total_ms = 0.0;
};

struct PipelineConfig {
    std::size_t chunk_count = 1024;
    bool enable_round1 = true;
    bool enable_round2 = true;
    bool chunked = true;  // false: one sequential walk per region
};

struct PipelineResult {
    Hull hull;
    StageStats stats;
};

// Stack scan over the angle-sorted buffer. Pops while the top two stack
// entries and the incoming point fail to make a strict left turn, so
// collinear runs (including those through the anchor) collapse to their
// extreme endpoints.
inline Hull graham_finalize(const AnnotatedBuffer& buf) {
    Hull h;
    std::vector<Point2>& stack = h.vertices;
    stack.reserve(buf.size());
    for (const Point2 p : buf.pts) {
        while (stack.size() >= 2 && orient(stack[stack.size() - 2], stack.back(), p) != Turn::Left)
            stack.pop_back();
        stack.push_back(p);
    }
    return h;
}

// Runs the full pipeline. The returned hull is the same vertex set for every
// config; the toggles only change how much work reaches the final scan.
// Disabled rounds report pass-through counts.
inline PipelineResult full_pipeline(std::span<const Point2> points, const PipelineConfig& cfg = {}) {
    if (points.empty()) throw EmptyInput("full_pipeline: no points");
    if (cfg.chunk_count == 0) throw ZeroChunks("full_pipeline: chunk_count must be positive");

    using Clock = std::chrono::steady_clock;
    const auto ms = [](Clock::time_point a, Clock::time_point b) {
        return std::chrono::duration<double, std::milli>(b - a).count();
    };

    PipelineResult r;
    r.stats.n_input = points.size();

    const auto t0 = Clock::now();
    std::vector<Point2> survivors;
    std::span<const Point2> stage1 = points;
    if (cfg.enable_round1) {
        const ExtremeQuad quad = find_extremes(points);
        const KeepFlags flags = classify_quad(points, quad);
        survivors = compact(points, flags);
        stage1 = survivors;
    }
    r.stats.n_after_round1 = stage1.size();
    const auto t1 = Clock::now();

    AnnotatedBuffer buf = annotate(stage1, select_anchor(stage1));
    const auto t2 = Clock::now();

    sort_by_angle(buf);
    const auto t3 = Clock::now();

    if (cfg.enable_round2 && buf.size() >= 2) {
        const RegionSplit split = split_regions(buf);
        const KeepFlags flags = cfg.chunked
                                    ? discard_chunked(buf, split.longest, {cfg.chunk_count})
                                    : discard_sequential(buf, split.longest);
        buf = stable_compact(buf, flags);
    }
    r.stats.n_after_round2 = buf.size();
    const auto t4 = Clock::now();

    r.hull = graham_finalize(buf);
    const auto t5 = Clock::now();

    r.stats.hull_size = r.hull.size();
    r.stats.t_round1_ms = ms(t0, t1);
    r.stats.t_annotate_ms = ms(t1, t2);
    r.stats.t_sort_ms = ms(t2, t3);
    r.stats.t_round2_ms = ms(t3, t4);
    r.stats.t_finalize_ms = ms(t4, t5);
    r.stats.t_total_ms = ms(t0, t5);
    return r;
}

}  // namespace hull2d
