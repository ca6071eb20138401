// hamlocate command line: solve / verify / census / gen / bench.
//
// Every subcommand exits 0 on success and nonzero otherwise; any failure is
// reported as a single-line JSON object on stdout so callers never have to
// scrape human-oriented text.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hamlocate/census.hpp"
#include "hamlocate/certificate.hpp"
#include "hamlocate/generators.hpp"
#include "hamlocate/graph.hpp"
#include "hamlocate/io.hpp"
#include "hamlocate/oracle.hpp"
#include "hamlocate/rng.hpp"
#include "hamlocate/solvers.hpp"

namespace {

using hamlocate::Graph;

int fail_json(const std::string& message) {
    nlohmann::json j;
    j["error"] = message;
    std::cout << j.dump() << "\n";
    return 1;
}

// Shared instance description for solve/gen/bench.
struct InstanceSpec {
    std::string family = "file";
    std::string file;
    int n = 0;
    std::uint64_t seed = 0;
    double noise = 0.02;       // ec1-family intra-side edge rate
    double cut_density = 0.02; // ec2-family cross edge rate
    int surplus = 0;           // random-dirac extra min degree
};

void add_instance_options(CLI::App* cmd, InstanceSpec& spec, bool allow_file) {
    std::vector<std::string> families = {"sharpness-bipartite", "sharpness-split",
                                         "random-dirac", "ec1-family", "ec2-family"};
    if (allow_file) families.push_back("file");
    cmd->add_option("--family", spec.family, "instance family")
        ->check(CLI::IsMember(families));
    if (allow_file)
        cmd->add_option("--file", spec.file, "graph file (.g6 or edge list), with --family file");
    cmd->add_option("--n", spec.n, "number of vertices");
    cmd->add_option("--seed", spec.seed, "root seed for generation and solving");
    cmd->add_option("--noise", spec.noise, "ec1-family: intra-side edge rate");
    cmd->add_option("--cut-density", spec.cut_density, "ec2-family: cross edge rate");
    cmd->add_option("--surplus", spec.surplus, "random-dirac: min degree surplus");
}

Graph build_instance(const InstanceSpec& spec) {
    if (spec.family == "file") {
        if (spec.file.empty())
            throw std::invalid_argument("--family file requires --file");
        return hamlocate::read_graph_file(spec.file);
    }
    if (spec.n <= 0)
        throw std::invalid_argument("--n is required for generated families");
    if (spec.family == "sharpness-bipartite") return hamlocate::gen_sharpness_bipartite(spec.n);
    if (spec.family == "sharpness-split") return hamlocate::gen_sharpness_split(spec.n);
    if (spec.family == "random-dirac") return hamlocate::gen_random_dirac(spec.n, spec.surplus, spec.seed);
    if (spec.family == "ec1-family") return hamlocate::gen_ec1(spec.n, spec.noise, spec.seed);
    if (spec.family == "ec2-family") return hamlocate::gen_ec2(spec.n, spec.cut_density, spec.seed);
    throw std::invalid_argument("unknown family " + spec.family);
}

int run_solve(const InstanceSpec& spec, int x, int y, const std::string& output) {
    const Graph g = build_instance(spec);
    hamlocate::DispatchConfig cfg;
    cfg.seed = spec.seed;
    const hamlocate::SolveReport report = hamlocate::dispatch(g, x, y, cfg);
    const std::string text = hamlocate::report_to_json(report);
    if (output.empty())
        std::cout << text << "\n";
    else
        hamlocate::write_text_file(output, text + "\n");
    return report.success ? 0 : 1;
}

int run_verify(const std::string& graph_path, const std::string& cert_path, int target) {
    const Graph g = hamlocate::read_graph_file(graph_path);
    const hamlocate::CycleCertificate cert =
        hamlocate::certificate_from_json(hamlocate::read_text_file(cert_path));
    if (target < 0) target = g.n() / 2;
    const hamlocate::Verdict v = hamlocate::verify_certificate(g, cert, target);
    nlohmann::json j;
    j["verified"] = v.ok;
    j["target"] = target;
    if (!v.ok) j["reason"] = v.reason;
    std::cout << j.dump() << "\n";
    return v.ok ? 0 : 1;
}

struct CensusArgs {
    std::vector<int> orders;
    std::string mode = "labeled";
    std::string pairs = "all";
    int sample_pairs = 10;
    int min_degree = -1;
    int target = -1;
    std::string catalog;
    std::string output;
    bool resume = false;
    int threads = 0;
    std::uint64_t seed = 0;
    std::int64_t node_limit = 0;
};

int run_census(const CensusArgs& args) {
    std::int64_t failures = 0;
    for (int n : args.orders) {
        hamlocate::CensusOptions opt;
        opt.n = n;
        opt.mode = args.mode == "canonical" ? hamlocate::EnumMode::Canonical
                   : args.mode == "catalog" ? hamlocate::EnumMode::Catalog
                                            : hamlocate::EnumMode::AllLabeled;
        opt.pair_policy = args.pairs == "sampled" ? hamlocate::PairPolicy::Sampled
                                                  : hamlocate::PairPolicy::AllPairs;
        opt.sample_pairs = args.sample_pairs;
        opt.min_degree = args.min_degree;
        opt.target_distance = args.target;
        opt.catalog_path = args.catalog;
        opt.output_path = args.output;
        opt.resume = args.resume;
        opt.keep_records = false;
        opt.threads = args.threads;
        opt.seed = args.seed;
        if (args.node_limit > 0) opt.budget.node_limit = args.node_limit;
        const hamlocate::CensusResult res = hamlocate::run_census(opt);
        const std::int64_t bad = static_cast<std::int64_t>(res.failures.size());
        std::cout << "census n=" << n << " mode=" << args.mode << ": " << res.graphs
                  << " graphs, " << res.pairs << " pairs, " << res.found << " found, "
                  << res.absent << " absent, " << res.exhausted << " exhausted, " << bad
                  << " failures\n";
        failures += bad;
    }
    return failures == 0 ? 0 : 1;
}

int run_gen(const InstanceSpec& spec, const std::string& output) {
    const Graph g = build_instance(spec);
    hamlocate::write_graph_file(g, output);
    nlohmann::json j;
    j["written"] = output;
    j["n"] = g.n();
    j["m"] = static_cast<std::int64_t>(g.m());
    j["min_degree"] = g.min_degree();
    std::cout << j.dump() << "\n";
    return 0;
}

int run_bench(std::vector<std::string> families, std::vector<int> sizes, std::uint64_t seed,
              int repeats) {
    if (families.empty()) families = {"random-dirac", "ec1-family", "ec2-family"};
    if (sizes.empty()) sizes = {200, 400};
    std::printf("%-20s %6s %4s %-14s %9s %9s\n", "family", "n", "ok", "method", "ms",
                "verify_ms");
    bool all_ok = true;
    for (const std::string& fam : families) {
        for (int n : sizes) {
            for (int r = 0; r < repeats; ++r) {
                InstanceSpec spec;
                spec.family = fam;
                spec.n = n;
                spec.seed = hamlocate::derive_seed(seed, fam, static_cast<std::uint64_t>(n) * 97 + r);
                Graph g = build_instance(spec);
                hamlocate::Rng rng{hamlocate::derive_seed(spec.seed, "bench-pair", r)};
                const int x = static_cast<int>(rng.below(g.n()));
                int y = static_cast<int>(rng.below(g.n()));
                while (y == x) y = static_cast<int>(rng.below(g.n()));
                hamlocate::DispatchConfig cfg;
                cfg.seed = spec.seed;
                const auto t0 = std::chrono::steady_clock::now();
                const hamlocate::SolveReport rep = hamlocate::dispatch(g, x, y, cfg);
                const auto t1 = std::chrono::steady_clock::now();
                double verify_ms = 0.0;
                if (rep.success && rep.certificate) {
                    const auto v0 = std::chrono::steady_clock::now();
                    const hamlocate::Verdict v =
                        hamlocate::verify_certificate(g, *rep.certificate, rep.target);
                    const auto v1 = std::chrono::steady_clock::now();
                    verify_ms = std::chrono::duration<double, std::milli>(v1 - v0).count();
                    if (!v.ok) all_ok = false;
                } else {
                    all_ok = false;
                }
                std::printf("%-20s %6d %4s %-14s %9.1f %9.2f\n", fam.c_str(), n,
                            rep.success ? "yes" : "NO", rep.method.c_str(),
                            std::chrono::duration<double, std::milli>(t1 - t0).count(),
                            verify_ms);
                std::fflush(stdout);
            }
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycles with a prescribed pairwise cycle distance"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "solve one instance and print a JSON report");
    InstanceSpec solve_spec;
    add_instance_options(solve, solve_spec, /*allow_file=*/true);
    int sx = 0, sy = 1;
    std::string solve_output;
    solve->add_option("--x", sx, "first distinguished vertex")->required();
    solve->add_option("--y", sy, "second distinguished vertex")->required();
    solve->add_option("--output", solve_output, "write the report here instead of stdout");

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
    std::string v_graph, v_cert;
    int v_target = -1;
    verify->add_option("graph", v_graph, "graph file (.g6 or edge list)")->required();
    verify->add_option("certificate", v_cert, "certificate JSON file")->required();
    verify->add_option("--target", v_target, "required cycle distance (default floor(n/2))");

    // census
    auto* census = app.add_subcommand("census", "enumerate graphs and check every pair");
    CensusArgs census_args;
    census->add_option("--n", census_args.orders, "orders to sweep (repeatable)")->required();
    census->add_option("--mode", census_args.mode, "labeled | canonical | catalog")
        ->check(CLI::IsMember({"labeled", "canonical", "catalog"}));
    census->add_option("--pairs", census_args.pairs, "all | sampled")
        ->check(CLI::IsMember({"all", "sampled"}));
    census->add_option("--sample-pairs", census_args.sample_pairs, "pairs per graph when sampled");
    census->add_option("--min-degree", census_args.min_degree,
                       "min degree filter (default: theorem bound)");
    census->add_option("--target", census_args.target, "cycle distance (default floor(n/2))");
    census->add_option("--catalog", census_args.catalog, "graph6 catalog file for --mode catalog");
    census->add_option("--output", census_args.output, "JSONL record sink (resumable)");
    census->add_flag("--resume", census_args.resume, "skip pairs already in --output");
    census->add_option("--threads", census_args.threads,
                       "worker threads (0: HAMLOCATE_THREADS or hardware)");
    census->add_option("--seed", census_args.seed, "seed for sampled pairs");
    census->add_option("--node-limit", census_args.node_limit, "search node budget per pair");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance and write it to a file");
    InstanceSpec gen_spec;
    gen_spec.family = "random-dirac";
    add_instance_options(gen, gen_spec, /*allow_file=*/false);
    std::string gen_output;
    gen->add_option("--output", gen_output, "destination (.g6 or edge list)")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "timing table across families and sizes");
    std::vector<std::string> bench_families;
    std::vector<int> bench_sizes;
    std::uint64_t bench_seed = 0;
    int bench_repeats = 1;
    bench->add_option("--family", bench_families, "families to run (repeatable)")
        ->check(CLI::IsMember({"sharpness-bipartite", "sharpness-split", "random-dirac",
                               "ec1-family", "ec2-family"}));
    bench->add_option("--n", bench_sizes, "sizes to run (repeatable)");
    bench->add_option("--seed", bench_seed, "root seed");
    bench->add_option("--repeats", bench_repeats, "instances per family/size cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cout << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (*solve) return run_solve(solve_spec, sx, sy, solve_output);
        if (*verify) return run_verify(v_graph, v_cert, v_target);
        if (*census) return run_census(census_args);
        if (*gen) return run_gen(gen_spec, gen_output);
        if (*bench) return run_bench(bench_families, bench_sizes, bench_seed, bench_repeats);
    } catch (const std::exception& e) {
        return fail_json(e.what());
    }
    return fail_json("no subcommand selected");
}
