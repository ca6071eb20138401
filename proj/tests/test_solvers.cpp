#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "hamlocate/certificate.hpp"
#include "hamlocate/generators.hpp"
#include "hamlocate/graph.hpp"
#include "hamlocate/oracle.hpp"
#include "hamlocate/solvers.hpp"

using namespace hamlocate;

namespace {

VertexSet range_set(int n, int lo, int hi) {
    VertexSet s((std::size_t)n);
    for (int v = lo; v < hi; ++v) s.set((std::size_t)v);
    return s;
}

void check_path(const Graph& g, const VertexSet& sub, int u, int v,
                const std::vector<int>& p) {
    REQUIRE(p.size() == sub.count());
    CHECK(p.front() == u);
    CHECK(p.back() == v);
    std::set<int> seen(p.begin(), p.end());
    CHECK(seen.size() == p.size());
    for (int w : p) CHECK(sub.test((std::size_t)w));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
}

void require_solved(const Graph& g, const SolveOutcome& out, int x, int y) {
    INFO("stage " << out.stage << ": " << out.detail);
    REQUIRE(out.ok);
    const Verdict v = verify_certificate(g, out.cert, g.n() / 2);
    INFO("verify: " << v.reason);
    CHECK(v.ok);
    CHECK(cycle_distance(out.cert.order, x, y) == g.n() / 2);
}

// Two cliques joined by a sparse planted cut plus one low-cross hub whose
// surgery forces it across the sweep and back as a strung middle vertex.
Graph split_with_hub() {
    GraphBuilder b(200);
    for (int base : {0, 100})
        for (int u = base; u < base + 100; ++u)
            for (int v = u + 1; v < base + 100; ++v) b.add_edge(u, v);
    for (int i = 0; i < 100; ++i) {
        b.add_edge(i, 100 + i);
        b.add_edge(i, 100 + (i + 1) % 100);
    }
    for (int v = 21; v < 100; ++v) b.remove_edge(0, v);
    for (int w = 100; w <= 188; ++w)
        if (!b.has_edge(0, w)) b.add_edge(0, w);
    for (int i = 21; i < 100; ++i) {
        const int tgt = 100 + (i + 50) % 100;
        if (!b.has_edge(i, tgt)) b.add_edge(i, tgt);
    }
    return b.build();
}

// Complete bipartite core plus intra-side floors and one low-degree hub that
// leaves its side during the sweep and returns as a strung middle vertex.
Graph bipartite_with_hub() {
    GraphBuilder b(200);
    for (int u = 0; u < 100; ++u)
        for (int v = 100; v < 200; ++v) b.add_edge(u, v);
    for (int i = 0; i + 1 < 100; i += 2) b.add_edge(i, i + 1);
    for (int j = 100; j < 200; ++j) b.add_edge(j, 100 + (j - 100 + 1) % 100);
    for (int v = 120; v < 200; ++v) b.remove_edge(0, v);
    for (int w = 1; w <= 89; ++w)
        if (!b.has_edge(0, w)) b.add_edge(0, w);
    return b.build();
}

} // namespace

TEST_CASE("classify detects planted structure") {
    const Ratio margin{1, 20};

    const Graph bip = complete_bipartite(6, 6);
    const ClassifyResult c1 = classify(bip, margin, 12, 1);
    CHECK(c1.verdict == ExtremalKind::EC1);
    CHECK(c1.exact);
    CHECK(c1.maxcut_edges == 36);
    CHECK(c1.part_a.count() == 6);
    CHECK(c1.part_b.count() == 6);

    GraphBuilder tb(12);
    for (int base : {0, 6})
        for (int u = base; u < base + 6; ++u)
            for (int v = u + 1; v < base + 6; ++v) tb.add_edge(u, v);
    tb.add_edge(0, 6);
    const ClassifyResult c2 = classify(tb.build(), margin, 12, 1);
    CHECK(c2.verdict == ExtremalKind::EC2);
    CHECK(c2.exact);
    CHECK(c2.mincut_edges == 1);

    CHECK(classify(gen_ec1(400, 0.02, 7), margin, 12, 7).verdict == ExtremalKind::EC1);
    CHECK(classify(gen_ec2(400, 0.02, 7), margin, 12, 7).verdict == ExtremalKind::EC2);
    CHECK(classify(gen_random_dirac(2000, 0, 7), margin, 8, 7).verdict ==
          ExtremalKind::NonExtremal);
}

TEST_CASE("dense spanning paths") {
    const Graph k10 = complete_graph(10);
    const VertexSet all10 = VertexSet::full(10);
    auto p = hamiltonian_path_dense(k10, all10, 0, 9, 1);
    REQUIRE(p.has_value());
    check_path(k10, all10, 0, 9, *p);

    GraphBuilder b(50);
    for (int u = 0; u < 50; ++u)
        for (int v = u + 1; v < 50; ++v)
            if (v != u + 25) b.add_edge(u, v);
    const Graph nearly = b.build();
    const VertexSet all50 = VertexSet::full(50);
    auto q = hamiltonian_path_dense(nearly, all50, 0, 30, 2);
    REQUIRE(q.has_value());
    check_path(nearly, all50, 0, 30, *q);

    for (std::uint64_t s = 1; s <= 20; ++s) {
        const Graph g = gen_gnp(100, 0.9, s);
        const VertexSet all = VertexSet::full(100);
        auto r = hamiltonian_path_dense(g, all, 0, 99, s);
        REQUIRE(r.has_value());
        check_path(g, all, 0, 99, *r);
        const VertexSet half = range_set(100, 0, 50);
        auto r2 = hamiltonian_path_dense(g, half, 3, 44, s);
        REQUIRE(r2.has_value());
        check_path(g, half, 3, 44, *r2);
    }
}

TEST_CASE("odd-order reduction and reinsertion") {
    GraphBuilder b(9);
    for (int i = 0; i < 8; ++i) b.add_edge(i, (i + 1) % 8);
    for (int w : {0, 1, 5, 6}) b.add_edge(8, w);
    const Graph g = b.build();
    const std::vector<int> cycle{0, 1, 2, 3, 4, 5, 6, 7};

    auto r = reinsert_vertex(g, cycle, 8, 0, 3);
    REQUIRE(r.has_value());
    const std::vector<int> expected{0, 1, 2, 3, 4, 5, 8, 6, 7};
    CHECK(*r == expected);
    CHECK(cycle_distance(*r, 0, 3) == 3);

    GraphBuilder b2(9);
    for (int i = 0; i < 8; ++i) b2.add_edge(i, (i + 1) % 8);
    b2.add_edge(8, 0);
    b2.add_edge(8, 1);
    auto r2 = reinsert_vertex(b2.build(), cycle, 8, 0, 3);
    REQUIRE(r2.has_value());
    CHECK(cycle_distance(*r2, 0, 3) == 4);

    GraphBuilder b3(9);
    for (int i = 0; i < 8; ++i) b3.add_edge(i, (i + 1) % 8);
    for (int w : {0, 2, 4, 6}) b3.add_edge(8, w);
    CHECK(!reinsert_vertex(b3.build(), cycle, 8, 0, 3).has_value());

    DispatchConfig cfg;
    const SolveReport rep = reduce_odd(complete_graph(5), 0, 1, cfg);
    REQUIRE(rep.success);
    CHECK(rep.verified);
    CHECK(rep.method == "reduce-odd(oracle)");
    REQUIRE(rep.certificate.has_value());
    CHECK(cycle_distance(rep.certificate->order, 0, 1) == 2);
    REQUIRE(!rep.stages.empty());
    CHECK(rep.stages.front().note.find('4') != std::string::npos);
}

TEST_CASE("near-bipartite solver") {
    const Params params;

    for (int n : {400, 402}) {
        const int h = n / 2;
        const Graph g = gen_ec1(n, 0.0, 5);
        const VertexSet v1 = range_set(n, 0, h);
        const VertexSet v2 = range_set(n, h, n);
        require_solved(g, solve_ec1(g, 0, 1, v1, v2, params, 3), 0, 1);
        require_solved(g, solve_ec1(g, 0, h, v1, v2, params, 3), 0, h);
    }

    // Two decoy intra edges; the construction must route purely across.
    {
        GraphBuilder b(402);
        for (int u = 0; u < 201; ++u)
            for (int v = 201; v < 402; ++v) b.add_edge(u, v);
        b.add_edge(0, 1);
        b.add_edge(201, 202);
        const Graph g = b.build();
        const VertexSet v1 = range_set(402, 0, 201);
        const VertexSet v2 = range_set(402, 201, 402);
        require_solved(g, solve_ec1(g, 0, 201, v1, v2, params, 3), 0, 201);
    }

    {
        const Graph g = bipartite_with_hub();
        CHECK(g.min_degree() == 101);
        const VertexSet v1 = range_set(200, 0, 100);
        const VertexSet v2 = range_set(200, 100, 200);
        require_solved(g, solve_ec1(g, 5, 60, v1, v2, params, 3), 5, 60);
        require_solved(g, solve_ec1(g, 5, 150, v1, v2, params, 3), 5, 150);
        require_solved(g, solve_ec1(g, 0, 150, v1, v2, params, 3), 0, 150);
    }
}

TEST_CASE("near-split solver") {
    const Params params;

    {
        const Graph g = gen_ec2(400, 0.02, 5);
        const VertexSet v1 = range_set(400, 0, 200);
        const VertexSet v2 = range_set(400, 200, 400);
        require_solved(g, solve_ec2(g, 0, 1, v1, v2, params, 3), 0, 1);
        require_solved(g, solve_ec2(g, 0, 250, v1, v2, params, 3), 0, 250);
    }

    // Cross edges touch only the terminals, forcing the far-side route.
    {
        GraphBuilder b(20);
        for (int base : {0, 10})
            for (int u = base; u < base + 10; ++u)
                for (int v = u + 1; v < base + 10; ++v) b.add_edge(u, v);
        for (int w : {10, 11, 12, 13}) b.add_edge(0, w);
        for (int w : {14, 15, 16, 17}) b.add_edge(1, w);
        b.add_edge(10, 2);
        b.add_edge(10, 3);
        const Graph g = b.build();
        const VertexSet v1 = range_set(20, 0, 10);
        const VertexSet v2 = range_set(20, 10, 20);
        require_solved(g, solve_ec2(g, 0, 1, v1, v2, params, 3), 0, 1);
    }

    {
        const Graph g = split_with_hub();
        CHECK(g.min_degree() == 101);
        const VertexSet v1 = range_set(200, 0, 100);
        const VertexSet v2 = range_set(200, 100, 200);
        require_solved(g, solve_ec2(g, 0, 50, v1, v2, params, 3), 0, 50);
        require_solved(g, solve_ec2(g, 0, 150, v1, v2, params, 3), 0, 150);
    }
}

TEST_CASE("non-extremal pipeline") {
    const Params params;

    const Graph k30 = complete_graph(30);
    const SolveOutcome sc = solve_nonextremal(k30, 3, 17, params, 1);
    require_solved(k30, sc, 3, 17);
    REQUIRE(!sc.stages.empty());
    CHECK(sc.stages.front().stage == "shortcut");

    const Graph g600 = gen_random_dirac(600, 0, 11);
    require_solved(g600, solve_nonextremal(g600, 0, 1, params, 11), 0, 1);

    const Graph g1002 = gen_random_dirac(1002, 0, 13);
    require_solved(g1002, solve_nonextremal(g1002, 5, 700, params, 13), 5, 700);
}

TEST_CASE("dispatch routing and equivalence") {
    DispatchConfig cfg;

    const SolveReport small = dispatch(complete_graph(8), 0, 4, cfg);
    REQUIRE(small.success);
    CHECK(small.method == "oracle");
    CHECK(small.verified);
    REQUIRE(small.certificate.has_value());
    CHECK(cycle_distance(small.certificate->order, 0, 4) == 4);
    const std::string js = report_to_json(small);
    CHECK(js.find("\"success\":true") != std::string::npos);
    CHECK(js.find("\"method\":\"oracle\"") != std::string::npos);

    {
        const SolveReport rep = dispatch(gen_ec1(400, 0.02, 3), 0, 1, cfg);
        REQUIRE(rep.success);
        CHECK(rep.classify_label == "ec1");
        CHECK(rep.method == "ec1");
    }
    {
        const SolveReport rep = dispatch(gen_ec2(400, 0.02, 3), 0, 250, cfg);
        REQUIRE(rep.success);
        CHECK(rep.classify_label == "ec2");
        CHECK(rep.method == "ec2");
    }
    {
        const SolveReport rep = dispatch(gen_random_dirac(600, 0, 3), 0, 1, cfg);
        REQUIRE(rep.success);
        CHECK(rep.classify_label == "nonextremal");
        CHECK(rep.method == "nonextremal");
    }
    {
        const SolveReport rep = dispatch(complete_graph(15), 0, 7, cfg);
        REQUIRE(rep.success);
        CHECK(rep.method == "reduce-odd(oracle)");
        REQUIRE(rep.certificate.has_value());
        CHECK(cycle_distance(rep.certificate->order, 0, 7) == 7);
    }

    for (std::uint64_t s = 1; s <= 5; ++s) {
        const Graph g = gen_random_dirac(12, 0, s);
        const SolveReport rep = dispatch(g, 0, 6, cfg);
        const SearchResult sr = find_cycle_with_distance(g, 0, 6, 6);
        CHECK(rep.success == (sr.status == SearchStatus::Found));
        if (rep.success) {
            REQUIRE(rep.certificate.has_value());
            CHECK(cycle_distance(rep.certificate->order, 0, 6) == 6);
        }
    }

    const SolveReport rej = dispatch(complete_bipartite(6, 6), 0, 6, cfg);
    CHECK(!rej.success);
    CHECK(rej.failure.rfind("rejected", 0) == 0);
}
