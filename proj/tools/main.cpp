#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hull2d/cli.hpp"

namespace {

using hull2d::PipelineConfig;
using hull2d::datagen::DatasetKind;
using hull2d::datagen::DatasetSpec;

DatasetKind parse_kind(const std::string& name) {
    if (name == "square") return DatasetKind::square;
    if (name == "disk") return DatasetKind::disk;
    if (name == "circle") return DatasetKind::circle;
    throw CLI::ValidationError("--gen", "unknown generator '" + name + "'");
}

struct DatasetFlags {
    std::vector<std::string> gens;
    std::vector<std::string> inputs;
    std::vector<std::string> objs;
    std::vector<std::size_t> ns{1000};
    std::vector<std::uint64_t> seeds{0};
};

void add_dataset_flags(CLI::App* cmd, DatasetFlags& f, bool multi) {
    const int limit = multi ? -1 : 1;
    cmd->add_option("--gen", f.gens, "generated dataset kind (square|disk|circle)")
        ->expected(0, limit);
    cmd->add_option("--input", f.inputs, "plain-XY point file")->expected(0, limit);
    cmd->add_option("--obj", f.objs, "OBJ file; vertices projected onto the XY plane")
        ->expected(0, limit);
    cmd->add_option("--n", f.ns, "point count for generated datasets")->expected(0, limit);
    cmd->add_option("--seed", f.seeds, "generator seed")->expected(0, limit);
}

// Cross product of generators x n x seed, plus one spec per file.
std::vector<DatasetSpec> expand_specs(const DatasetFlags& f) {
    std::vector<DatasetSpec> specs;
    for (const std::string& g : f.gens) {
        for (const std::size_t n : f.ns) {
            for (const std::uint64_t seed : f.seeds) {
                specs.push_back({parse_kind(g), n, seed, "", false});
            }
        }
    }
    for (const std::string& path : f.inputs)
        specs.push_back({DatasetKind::file, 0, 0, path, false});
    for (const std::string& path : f.objs) specs.push_back({DatasetKind::file, 0, 0, path, true});
    return specs;
}

DatasetSpec single_spec(const DatasetFlags& f) {
    const auto specs = expand_specs(f);
    if (specs.empty()) throw CLI::RequiredError("one of --gen / --input / --obj");
    if (specs.size() > 1) throw CLI::ValidationError("dataset", "expected exactly one dataset");
    return specs.front();
}

void add_pipeline_flags(CLI::App* cmd, PipelineConfig& cfg) {
    cmd->add_option("--chunks", cfg.chunk_count, "slice count per region for round 2")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--no-round1", [&cfg](std::int64_t) { cfg.enable_round1 = false; },
                  "skip the quadrilateral pretest");
    cmd->add_flag("--no-round2", [&cfg](std::int64_t) { cfg.enable_round2 = false; },
                  "skip the sorted-region discard");
    cmd->add_flag("--sequential-discard", [&cfg](std::int64_t) { cfg.chunked = false; },
                  "run round 2 as one walk per region instead of chunked");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D convex hull via two-round interior-point discarding and Graham scan"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "compute one hull and print a summary");
    DatasetFlags run_ds;
    PipelineConfig run_cfg;
    std::string run_out;
    add_dataset_flags(run, run_ds, false);
    add_pipeline_flags(run, run_cfg);
    run->add_option("--out", run_out, "write hull vertices to this file instead of stdout");

    // bench
    auto* bench = app.add_subcommand("bench", "time the pipeline against the baseline, emit CSV");
    DatasetFlags bench_ds;
    PipelineConfig bench_cfg;
    hull2d::cli::BenchOptions bench_opt;
    add_dataset_flags(bench, bench_ds, true);
    add_pipeline_flags(bench, bench_cfg);
    bench->add_option("--repeats", bench_opt.repeats, "runs per dataset (median reported)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--csv", bench_opt.csv_path, "append CSV rows to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "check pipeline hulls and discards against oracles");
    DatasetFlags verify_ds;
    verify_ds.gens.clear();
    hull2d::cli::VerifyOptions verify_opt;
    verify->add_option("--input", verify_ds.inputs, "extra plain-XY files to verify")
        ->expected(0, -1);
    verify->add_option("--obj", verify_ds.objs, "extra OBJ files to verify")->expected(0, -1);
    verify->add_option("--seeds", verify_opt.seeds, "seeds per generator in the default matrix")
        ->capture_default_str();
    verify->add_option("--n", verify_opt.n, "points per generated dataset")->capture_default_str();
    verify->add_option("--chunks", verify_opt.chunk_counts, "chunk counts to exercise")
        ->expected(0, -1);
    verify->add_option("--jobs", verify_opt.jobs, "parallel verification threads")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_flag("--inject-fault", verify_opt.inject_fault,
                     "self-test: force one unsafe discard and expect a failure")
        ->group("");

    // gen
    auto* gen = app.add_subcommand("gen", "materialize a dataset as plain XY");
    DatasetFlags gen_ds;
    std::string gen_out;
    add_dataset_flags(gen, gen_ds, false);
    gen->get_option("--input")->group("");  // files cannot be generated
    gen->get_option("--obj")->group("");
    gen->add_option("--out", gen_out, "write points to this file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        hull2d::cli::RunOptions opt;
        try {
            opt.spec = single_spec(run_ds);
        } catch (const CLI::Error& e) {
            return app.exit(e);
        }
        opt.cfg = run_cfg;
        opt.out_path = run_out;
        return hull2d::cli::cmd_run(opt, std::cout, std::cerr);
    }
    if (bench->parsed()) {
        if (bench_ds.gens.empty() && bench_ds.inputs.empty() && bench_ds.objs.empty())
            bench_ds.gens = {"square"};
        bench_opt.specs = expand_specs(bench_ds);
        bench_opt.cfg = bench_cfg;
        return hull2d::cli::cmd_bench(bench_opt, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        verify_opt.specs = expand_specs(verify_ds);
        if (verify_opt.chunk_counts.empty()) verify_opt.chunk_counts = {1, 7, 1024};
        return hull2d::cli::cmd_verify(verify_opt, std::cout, std::cerr);
    }
    if (gen->parsed()) {
        hull2d::cli::GenOptions opt;
        try {
            opt.spec = single_spec(gen_ds);
            if (opt.spec.kind == DatasetKind::file)
                throw CLI::ValidationError("gen", "gen requires --gen square|disk|circle");
        } catch (const CLI::Error& e) {
            return app.exit(e);
        }
        opt.out_path = gen_out;
        return hull2d::cli::cmd_gen(opt, std::cout, std::cerr);
    }
    return 0;
}
