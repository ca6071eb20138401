#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "hamlocate/canonical.hpp"
#include "hamlocate/census.hpp"
#include "hamlocate/generators.hpp"
#include "hamlocate/io.hpp"

using namespace hamlocate;

namespace {

// Record identity for set comparisons: all fields except wall-clock timing.
std::string record_key(const CensusRecord& r) {
    CensusRecord c = r;
    c.elapsed_ms = 0.0;
    return census_record_to_json(c);
}

} // namespace

TEST_CASE("canonical form: isomorphic graphs agree, non-isomorphic differ") {
    // C5 under two labelings
    Graph a = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Graph b = Graph::from_edge_list(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_g6(a) == canonical_g6(b));
    // P5 (path) is not C5
    Graph p = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(canonical_g6(a) != canonical_g6(p));
    // K4 vs K4 minus an edge
    Graph k4 = complete_graph(4);
    Graph k4e = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(canonical_g6(k4) != canonical_g6(k4e));
    // highly symmetric cases terminate fast
    CHECK(canonical_g6(Graph::from_edge_list(10, {})) == to_graph6(Graph::from_edge_list(10, {})));
    CHECK(canonical_g6(complete_graph(10)) == to_graph6(complete_graph(10)));
    Graph matching = Graph::from_edge_list(
        10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
    Graph matching_rl = Graph::from_edge_list(
        10, {{0, 9}, {1, 8}, {2, 7}, {3, 6}, {4, 5}});
    CHECK(canonical_g6(matching) == canonical_g6(matching_rl));
}

TEST_CASE("labeled enumeration: n=6 theorem-bound instances number 76") {
    // delta >= 4 at n=6 <=> complement is a matching on 6 vertices:
    // 1 + 15 + 45 + 15 labeled matchings.
    auto graphs = enumerate_min_degree_labeled(6, 4);
    CHECK(graphs.size() == 76);
    for (const Graph& g : graphs) CHECK(g.min_degree() >= 4);
}

TEST_CASE("canonical enumeration matches labeled classes at n=6 and n=7") {
    for (auto [n, md] : std::vector<std::pair<int, int>>{{6, 4}, {7, 5}, {6, 3}}) {
        auto labeled = enumerate_min_degree_labeled(n, md);
        std::set<std::string> label_classes;
        for (const Graph& g : labeled) label_classes.insert(canonical_g6(g));
        auto canon = enumerate_min_degree_canonical(n, md);
        std::set<std::string> canon_classes;
        for (const Graph& g : canon) {
            CHECK(g.min_degree() >= md);
            canon_classes.insert(canonical_g6(g));
        }
        CHECK(canon_classes.size() == canon.size()); // no duplicate classes
        CHECK(canon_classes == label_classes);
    }
}

TEST_CASE("census n=6 labeled: zero failures at the theorem bound") {
    CensusOptions opt;
    opt.n = 6;
    opt.mode = EnumMode::AllLabeled;
    opt.keep_records = true;
    opt.threads = 2;
    CensusResult r = run_census(opt);
    CHECK(r.graphs == 76);
    CHECK(r.pairs == 76 * 15);
    CHECK(r.found == r.pairs);
    CHECK(r.failures.empty());
    CHECK(r.exhausted == 0);
}

TEST_CASE("census n=7 canonical: zero failures at delta >= (n+3)/2, d=3") {
    CensusOptions opt;
    opt.n = 7;
    opt.mode = EnumMode::Canonical;
    opt.keep_records = true;
    CensusResult r = run_census(opt);
    CHECK(r.graphs == 4); // complement classes: matchings with 0..3 edges
    CHECK(r.found == r.pairs);
    CHECK(r.failures.empty());
}

TEST_CASE("census n=6 with lowered threshold: K_{3,3} same-part pairs fail") {
    CensusOptions opt;
    opt.n = 6;
    opt.min_degree = 3; // below the theorem bound: sharpness appears
    opt.mode = EnumMode::Canonical;
    opt.keep_records = true;
    CensusResult r = run_census(opt);
    CHECK(!r.failures.empty());
    std::string k33 = canonical_g6(complete_bipartite(3, 3));
    bool k33_failures = false;
    for (const CensusRecord& rec : r.failures) {
        Graph g = from_graph6(rec.graph_id);
        if (canonical_g6(g) == k33) {
            k33_failures = true;
            // same-part pairs are exactly the non-adjacent ones in K_{3,3}
            CHECK_FALSE(g.has_edge(rec.x, rec.y));
            CHECK(rec.outcome == SearchStatus::Absent);
        }
    }
    CHECK(k33_failures);
}

TEST_CASE("census resume reproduces the identical record set") {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "hamlocate_census_resume.jsonl").string();
    std::remove(path.c_str());

    CensusOptions opt;
    opt.n = 6;
    opt.mode = EnumMode::Canonical;
    opt.keep_records = true;
    opt.output_path = path;
    CensusResult full = run_census(opt);
    std::multiset<std::string> want;
    for (const CensusRecord& r : full.records) want.insert(record_key(r));

    // Simulate an interrupted run: keep only the records of one graph.
    std::string keep_id = full.records.front().graph_id;
    std::ofstream partial(path, std::ios::trunc);
    int kept = 0;
    for (const CensusRecord& r : full.records)
        if (r.graph_id == keep_id) {
            partial << census_record_to_json(r) << "\n";
            ++kept;
        }
    partial.close();
    CHECK(kept == 15);

    CensusOptions resume = opt;
    resume.resume = true;
    CensusResult second = run_census(resume);
    CHECK(second.pairs == full.pairs);
    CHECK(second.found == full.found);

    std::multiset<std::string> got;
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) got.insert(record_key(census_record_from_json(line)));
    CHECK(got == want);
    std::remove(path.c_str());
}

TEST_CASE("catalog mode filters by degree bound") {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "hamlocate_census_catalog.g6").string();
    {
        std::ofstream out(path, std::ios::trunc);
        out << to_graph6(complete_graph(6)) << "\n";
        out << to_graph6(cycle_graph(6)) << "\n"; // degree 2: filtered out
    }
    CensusOptions opt;
    opt.n = 6;
    opt.mode = EnumMode::Catalog;
    opt.catalog_path = path;
    opt.keep_records = true;
    CensusResult r = run_census(opt);
    CHECK(r.graphs == 1);
    CHECK(r.found == 15);
    std::remove(path.c_str());
}

TEST_CASE("sampled pair policy is deterministic per seed") {
    CensusOptions opt;
    opt.n = 8;
    opt.mode = EnumMode::Canonical;
    opt.pair_policy = PairPolicy::Sampled;
    opt.sample_pairs = 3;
    opt.seed = 99;
    opt.keep_records = true;
    CensusResult a = run_census(opt);
    CensusResult b = run_census(opt);
    REQUIRE(a.records.size() == b.records.size());
    std::multiset<std::string> sa, sb;
    for (const auto& r : a.records) sa.insert(record_key(r));
    for (const auto& r : b.records) sb.insert(record_key(r));
    CHECK(sa == sb);
    CHECK(a.pairs == a.graphs * 3);
}

TEST_CASE("census record JSON round trip") {
    CensusRecord r;
    r.graph_id = "C~";
    r.n = 4;
    r.x = 0;
    r.y = 2;
    r.outcome = SearchStatus::Absent;
    r.nodes = 17;
    r.elapsed_ms = 0.25;
    CensusRecord back = census_record_from_json(census_record_to_json(r));
    CHECK(back.graph_id == r.graph_id);
    CHECK(back.outcome == r.outcome);
    CHECK(back.nodes == r.nodes);
}

TEST_CASE("worker_count respects explicit, env, and default") {
    CHECK(worker_count(3) == 3);
    setenv("HAMLOCATE_THREADS", "5", 1);
    CHECK(worker_count(0) == 5);
    unsetenv("HAMLOCATE_THREADS");
    CHECK(worker_count(0) >= 1);
}
