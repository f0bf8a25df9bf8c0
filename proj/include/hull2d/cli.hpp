#pragma once

// Command implementations behind the hull2d binary: run, bench, verify, gen.
// They take option structs and streams so tests can drive them directly.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "hull2d/datagen.hpp"
#include "hull2d/oracle.hpp"
#include "hull2d/pipeline.hpp"

namespace hull2d::cli {

struct RunReport {
    datagen::DatasetSpec spec;
    PipelineConfig cfg;
    StageStats stats;
    std::optional<double> baseline_ms;  // monotone_chain wall time
    std::optional<double> speedup;      // baseline_ms / t_total_ms
    double remaining_r1_pct = 0.0;
    double remaining_r2_pct = 0.0;
};

inline constexpr std::string_view kCsvHeader =
    "dataset,n,seed,chunks,n_after_r1,n_after_r2,hull_size,t_r1_ms,t_annotate_ms,t_sort_ms,"
    "t_r2_ms,t_finalize_ms,t_total_ms,baseline_ms,speedup,remaining_r1_pct,remaining_r2_pct";

inline RunReport make_report(const datagen::DatasetSpec& spec, const PipelineConfig& cfg,
                             const StageStats& stats,
                             std::optional<double> baseline_ms = std::nullopt) {
    RunReport r{spec, cfg, stats, baseline_ms, std::nullopt, 0.0, 0.0};
    r.remaining_r1_pct =
        100.0 * static_cast<double>(stats.n_after_round1) / static_cast<double>(stats.n_input);
    r.remaining_r2_pct =
        100.0 * static_cast<double>(stats.n_after_round2) / static_cast<double>(stats.n_input);
    if (baseline_ms) r.speedup = *baseline_ms / stats.t_total_ms;
    return r;
}

inline std::string csv_row(const RunReport& r) {
    std::ostringstream os;
    os << datagen::dataset_label(r.spec) << ',' << r.stats.n_input << ',' << r.spec.seed << ','
       << r.cfg.chunk_count << ',' << r.stats.n_after_round1 << ',' << r.stats.n_after_round2
       << ',' << r.stats.hull_size << ',' << std::fixed << std::setprecision(6)
       << r.stats.t_round1_ms << ',' << r.stats.t_annotate_ms << ',' << r.stats.t_sort_ms << ','
       << r.stats.t_round2_ms << ',' << r.stats.t_finalize_ms << ',' << r.stats.t_total_ms << ',';
    if (r.baseline_ms) os << *r.baseline_ms;
    os << ',';
    if (r.speedup) os << *r.speedup;
    os << ',' << r.remaining_r1_pct << ',' << r.remaining_r2_pct;
    return os.str();
}

// One-line human summary; '#'-prefixed so it can share a stream with plain-XY
// hull output.
inline std::string summary_line(const RunReport& r) {
    std::ostringstream os;
    os << "# dataset=" << datagen::dataset_label(r.spec) << " n=" << r.stats.n_input
       << " seed=" << r.spec.seed << " chunks=" << r.cfg.chunk_count
       << " n_after_r1=" << r.stats.n_after_round1 << " n_after_r2=" << r.stats.n_after_round2
       << " hull_size=" << r.stats.hull_size << std::fixed << std::setprecision(3)
       << " t_total_ms=" << r.stats.t_total_ms << " remaining_r1_pct=" << r.remaining_r1_pct
       << " remaining_r2_pct=" << r.remaining_r2_pct;
    if (r.baseline_ms) os << " baseline_ms=" << *r.baseline_ms;
    if (r.speedup) os << " speedup=" << *r.speedup;
    return os.str();
}

inline std::string format_coord(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Plain-XY output; coordinates round-trip exactly through load_points.
inline void write_xy(std::ostream& os, std::span<const Point2> pts) {
    for (const Point2 p : pts) os << format_coord(p.x) << ' ' << format_coord(p.y) << '\n';
}

namespace detail {

template <typename Fn>
double wall_ms(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// run

struct RunOptions {
    datagen::DatasetSpec spec;
    PipelineConfig cfg;
    std::string out_path;  // empty: hull goes to `out`
};

inline int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const std::vector<Point2> points = datagen::materialize(opt.spec);
        const PipelineResult result = full_pipeline(points, opt.cfg);
        if (opt.out_path.empty()) {
            write_xy(out, result.hull.vertices);
        } else {
            std::ofstream file(opt.out_path);
            if (!file) throw IoError("cannot write " + opt.out_path);
            write_xy(file, result.hull.vertices);
        }
        out << summary_line(make_report(opt.spec, opt.cfg, result.stats)) << '\n';
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

// ---------------------------------------------------------------------------
// gen

struct GenOptions {
    datagen::DatasetSpec spec;
    std::string out_path;  // empty: stdout
};

inline int cmd_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.spec.kind == datagen::DatasetKind::file)
            throw Error("gen requires a generator dataset (--gen square|disk|circle)");
        const std::vector<Point2> points = datagen::materialize(opt.spec);
        if (opt.out_path.empty()) {
            write_xy(out, points);
        } else {
            std::ofstream file(opt.out_path);
            if (!file) throw IoError("cannot write " + opt.out_path);
            write_xy(file, points);
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
    std::vector<datagen::DatasetSpec> specs;
    PipelineConfig cfg;
    std::size_t repeats = 5;  // per-column medians over this many runs
    std::string csv_path;     // empty: CSV goes to `out`; else append to file
};

inline RunReport bench_one(const datagen::DatasetSpec& spec, const PipelineConfig& cfg,
                           std::size_t repeats) {
    const std::vector<Point2> points = datagen::materialize(spec);
    std::vector<double> base_ms, r1, annotate, sort, r2, finalize, total;
    StageStats last{};
    std::size_t baseline_hull = 0;
    for (std::size_t rep = 0; rep < repeats; ++rep) {
        base_ms.push_back(detail::wall_ms([&] {
            const Hull h = oracle::monotone_chain(points);
            baseline_hull = h.size();
        }));
        const PipelineResult result = full_pipeline(points, cfg);
        last = result.stats;
        r1.push_back(last.t_round1_ms);
        annotate.push_back(last.t_annotate_ms);
        sort.push_back(last.t_sort_ms);
        r2.push_back(last.t_round2_ms);
        finalize.push_back(last.t_finalize_ms);
        total.push_back(last.t_total_ms);
        if (result.hull.size() != baseline_hull)
            throw Error("bench: pipeline hull size disagrees with baseline on " +
                        datagen::dataset_label(spec));
    }
    StageStats stats = last;  // counts are deterministic across repeats
    stats.t_round1_ms = detail::median(r1);
    stats.t_annotate_ms = detail::median(annotate);
    stats.t_sort_ms = detail::median(sort);
    stats.t_round2_ms = detail::median(r2);
    stats.t_finalize_ms = detail::median(finalize);
    stats.t_total_ms = detail::median(total);
    return make_report(spec, cfg, stats, detail::median(base_ms));
}

inline int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        if (opt.repeats < 1) throw Error("bench: repeats must be >= 1");
        if (opt.specs.empty()) throw Error("bench: no datasets given");

        std::ofstream file;
        std::ostream* csv = &out;
        bool header = true;
        if (!opt.csv_path.empty()) {
            std::error_code ec;
            const auto size = std::filesystem::file_size(opt.csv_path, ec);
            header = ec || size == 0;  // append mode: header only for a fresh file
            file.open(opt.csv_path, std::ios::app);
            if (!file) throw IoError("cannot write " + opt.csv_path);
            csv = &file;
        }
        if (header) *csv << kCsvHeader << '\n';

        for (const datagen::DatasetSpec& spec : opt.specs) {
            const RunReport report = bench_one(spec, opt.cfg, opt.repeats);
            *csv << csv_row(report) << '\n';
            csv->flush();
            if (csv != &out) out << summary_line(report) << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCase {
    std::string label;
    std::uint64_t seed = 0;
    std::vector<Point2> points;
};

struct Violation {
    std::string label;
    std::uint64_t seed = 0;
    std::size_t chunk_count = 0;
    bool chunked = true;
    std::string reason;
    Point2 point{};
};

// Oracle-checks one dataset under one pipeline config: every discarded point
// must be strictly inside the oracle hull, and the final hull must match the
// oracle's vertex set. With inject_fault, one kept hull vertex is flipped to
// "interior" to prove the safety check trips.
inline std::optional<Violation> check_case(const VerifyCase& vc, const Hull& oracle_hull,
                                           const PipelineConfig& cfg, bool inject_fault = false) {
    const auto fail = [&](const std::string& reason, Point2 p) {
        return Violation{vc.label, vc.seed, cfg.chunk_count, cfg.chunked, reason, p};
    };

    std::span<const Point2> points(vc.points);
    std::vector<Point2> survivors;
    if (cfg.enable_round1) {
        const ExtremeQuad quad = find_extremes(points);
        const KeepFlags flags = classify_quad(points, quad);
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!flags[i] && !oracle::strictly_inside_hull(oracle_hull, points[i]))
                return fail("round-1 discarded a non-interior point", points[i]);
        }
        survivors = compact(points, flags);
        points = survivors;
    }

    AnnotatedBuffer buf = annotate(points, select_anchor(points));
    sort_by_angle(buf);

    if (cfg.enable_round2 && buf.size() >= 2) {
        const RegionSplit split = split_regions(buf);
        KeepFlags flags = cfg.chunked ? discard_chunked(buf, split.longest, {cfg.chunk_count})
                                      : discard_sequential(buf, split.longest);
        if (inject_fault) {
            const auto& hv = oracle_hull.vertices;
            for (std::size_t i = 1; i < buf.size(); ++i) {
                if (std::find(hv.begin(), hv.end(), buf.pts[i]) != hv.end()) {
                    flags[i] = 0;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < buf.size(); ++i) {
            if (!flags[i] && !oracle::strictly_inside_hull(oracle_hull, buf.pts[i]))
                return fail("round-2 discarded a non-interior point", buf.pts[i]);
        }
        buf = stable_compact(buf, flags);
    }

    const Hull hull = graham_finalize(buf);
    if (!oracle::same_vertex_set(hull, oracle_hull)) {
        Point2 offender{};
        for (const Point2 v : oracle_hull.vertices) {
            if (std::find(hull.vertices.begin(), hull.vertices.end(), v) == hull.vertices.end()) {
                offender = v;
                break;
            }
        }
        return fail("hull vertex set differs from oracle", offender);
    }
    return std::nullopt;
}

struct VerifyOptions {
    std::vector<datagen::DatasetSpec> specs;  // extra datasets checked on top of the matrix
    std::size_t seeds = 50;
    std::size_t n = 2000;
    std::vector<std::size_t> chunk_counts{1, 7, 1024};
    bool include_sequential = true;  // also check the single-walk configuration
    std::size_t jobs = 1;
    bool inject_fault = false;  // self-test: must exit nonzero
};

inline std::vector<VerifyCase> default_matrix(std::size_t seeds, std::size_t n) {
    std::vector<VerifyCase> cases;
    for (std::uint64_t s = 0; s < seeds; ++s) {
        cases.push_back({"square", s, datagen::gen_square(n, s)});
        cases.push_back({"disk", s, datagen::gen_disk(n, s)});
        cases.push_back({"circle", s, datagen::gen_circle(std::max<std::size_t>(n, 3), s)});
        cases.push_back({"collinear", s, datagen::gen_collinear(n, s)});
    }
    // degenerate sizes and an all-duplicate set
    for (std::size_t tiny : {1, 2, 3}) {
        cases.push_back({"square-n" + std::to_string(tiny), 7, datagen::gen_square(tiny, 7)});
        cases.push_back({"collinear-n" + std::to_string(tiny), 7, datagen::gen_collinear(tiny, 7)});
    }
    cases.push_back({"duplicate", 0, std::vector<Point2>(5, Point2{0.25, 0.5})});
    return cases;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        std::vector<VerifyCase> cases = default_matrix(opt.seeds, opt.n);
        for (const datagen::DatasetSpec& spec : opt.specs)
            cases.push_back({datagen::dataset_label(spec), spec.seed, datagen::materialize(spec)});

        std::vector<PipelineConfig> configs;
        for (const std::size_t k : opt.chunk_counts)
            configs.push_back({.chunk_count = k, .chunked = true});
        if (opt.include_sequential) configs.push_back({.chunked = false});

        std::vector<std::optional<Violation>> results(cases.size());
        std::atomic<std::size_t> next{0};
        const auto worker = [&] {
            for (;;) {
                const std::size_t ci = next.fetch_add(1);
                if (ci >= cases.size()) return;
                const VerifyCase& vc = cases[ci];
                const Hull oracle_hull = oracle::monotone_chain(vc.points);
                for (std::size_t gi = 0; gi < configs.size(); ++gi) {
                    const bool fault = opt.inject_fault && ci == 0 && gi == 0;
                    if (auto v = check_case(vc, oracle_hull, configs[gi], fault)) {
                        results[ci] = std::move(v);
                        break;
                    }
                }
            }
        };

        const std::size_t jobs = std::max<std::size_t>(1, opt.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (std::thread& t : pool) t.join();
        }

        for (const auto& v : results) {
            if (!v) continue;
            err << "verify: FAIL dataset=" << v->label << " seed=" << v->seed
                << " chunks=" << v->chunk_count << (v->chunked ? "" : " (sequential)")
                << " point=(" << format_coord(v->point.x) << ", " << format_coord(v->point.y)
                << "): " << v->reason << '\n';
            return 1;
        }
        out << "verify: PASS (" << cases.size() << " datasets x " << configs.size()
            << " configs)\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace hull2d::cli
