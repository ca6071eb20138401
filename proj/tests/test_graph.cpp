#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hamlocate/bitset.hpp"
#include "hamlocate/certificate.hpp"
#include "hamlocate/generators.hpp"
#include "hamlocate/graph.hpp"
#include "hamlocate/ratio.hpp"
#include "hamlocate/rng.hpp"

using namespace hamlocate;

TEST_CASE("VertexSet basics") {
    VertexSet s(130);
    CHECK(s.empty());
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.test(64));
    CHECK_FALSE(s.test(63));
    CHECK(s.first() == 0);
    CHECK(s.next(1) == 64);
    CHECK(s.next(65) == 129);
    CHECK(s.next(130) == 130);
    s.reset(64);
    CHECK(s.count() == 2);

    VertexSet a = VertexSet::of(10, {1, 3, 5});
    VertexSet b = VertexSet::of(10, {3, 5, 7});
    CHECK(a.and_count(b) == 2);
    VertexSet c = a;
    c &= b;
    CHECK(c.to_vector() == std::vector<int>{3, 5});
    c = a;
    c |= b;
    CHECK(c.count() == 4);
    c = a;
    c.subtract(b);
    CHECK(c.to_vector() == std::vector<int>{1});
    CHECK(VertexSet::full(10).count() == 10);
    CHECK(VertexSet::full(64).count() == 64);
    CHECK(VertexSet::full(65).count() == 65);
}

TEST_CASE("Ratio parsing and exact comparison") {
    CHECK(Ratio::parse("3/20") == Ratio(3, 20));
    CHECK(Ratio::parse("0.15") == Ratio(3, 20));
    CHECK(Ratio::parse("1/729") == Ratio(1, 729));
    CHECK(Ratio::parse("0.5") == Ratio(1, 2));
    CHECK(Ratio::parse("2") == Ratio(2, 1));
    CHECK_THROWS(Ratio::parse("1/0"));
    CHECK_THROWS(Ratio::parse("-1/2"));

    CHECK(count_ge(3, Ratio(1, 2), 6));
    CHECK_FALSE(count_gt(3, Ratio(1, 2), 6));
    CHECK(count_gt(4, Ratio(1, 2), 6));
    // |5/10 - 4/10| = 0.1 < 0.15 but not < 0.1
    CHECK(deviation_lt(5, 10, 4, 10, Ratio(3, 20)));
    CHECK_FALSE(deviation_lt(5, 10, 4, 10, Ratio(1, 10)));
}

TEST_CASE("from_edge_list: triangle, K4, self-loop rejection") {
    Graph tri = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

    Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    CHECK(k4.m() == 6);

    CHECK_THROWS(Graph::from_edge_list(2, {{0, 0}}));
    CHECK_THROWS(Graph::from_edge_list(2, {{0, 3}}));
    CHECK_THROWS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}));
}

TEST_CASE("degree_into") {
    Graph k4 = complete_graph(4);
    CHECK(k4.degree_into(0, VertexSet::of(4, {1, 2})) == 2);
    CHECK(k4.degree_into(0, VertexSet(4)) == 0);

    Graph k33 = complete_bipartite(3, 3);
    VertexSet A = VertexSet::of(6, {0, 1, 2});
    CHECK(k33.degree_into(0, A) == 0);
    CHECK(k33.degree_into(0, VertexSet::full(6)) == k33.degree(0));
}

TEST_CASE("density: complete and empty bipartitions") {
    Graph k33 = complete_bipartite(3, 3);
    VertexSet A = VertexSet::of(6, {0, 1, 2});
    VertexSet B = VertexSet::of(6, {3, 4, 5});
    Density d = density(k33, A, B);
    CHECK(d.edges == 9);
    CHECK(d.cells == 9);
    CHECK(d.to_double() == 1.0);

    Graph empty = Graph::from_edge_list(6, {});
    CHECK(density(empty, A, B).edges == 0);
}

TEST_CASE("density: symmetry and range properties") {
    Graph g = gen_gnp(40, 0.4, 99);
    Rng rng(derive_seed(99, "density-prop", 0));
    for (int t = 0; t < 20; ++t) {
        std::vector<int> ids(40);
        std::iota(ids.begin(), ids.end(), 0);
        rng.shuffle(ids);
        VertexSet X = VertexSet::of(40, {ids.begin(), ids.begin() + 10});
        VertexSet Y = VertexSet::of(40, {ids.begin() + 10, ids.begin() + 25});
        Density xy = density(g, X, Y);
        Density yx = density(g, Y, X);
        CHECK(xy.edges == yx.edges);
        CHECK(xy.cells == yx.cells);
        CHECK(xy.edges >= 0);
        CHECK(xy.edges <= xy.cells);
    }
}

TEST_CASE("density regression: G(200,0.5) seed 1, two seeded 50-sets") {
    Graph g = gen_gnp(200, 0.5, 1);
    Rng rng(derive_seed(1, "density-regression", 0));
    std::vector<int> ids(200);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    VertexSet X = VertexSet::of(200, {ids.begin(), ids.begin() + 50});
    VertexSet Y = VertexSet::of(200, {ids.begin() + 50, ids.begin() + 100});
    Density d = density(g, X, Y);
    CHECK(d.cells == 2500);
    // Frozen regression constant: exact edge count for this seed chain.
    CHECK(d.edges == 1235);
    CHECK(d.to_double() > 0.4);
    CHECK(d.to_double() < 0.6);
}

TEST_CASE("handshake: sum of degrees = 2|E|") {
    for (std::uint64_t seed : {3ull, 4ull, 5ull}) {
        Graph g = gen_gnp(60, 0.3, seed);
        std::int64_t total = 0;
        for (int v = 0; v < g.n(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.m());
    }
}

TEST_CASE("cycle_distance on fixed orders") {
    std::vector<int> c6{0, 1, 2, 3, 4, 5};
    CHECK(cycle_distance(c6, 0, 3) == 3);
    CHECK(cycle_distance(c6, 0, 5) == 1);
    std::vector<int> c10{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(cycle_distance(c10, 0, 7) == 3);
    CHECK_THROWS(cycle_distance(c6, 0, 9));
}

TEST_CASE("cycle_distance invariance under rotation and reversal") {
    Rng rng(derive_seed(7, "cycdist-prop", 0));
    for (int t = 0; t < 50; ++t) {
        int n = rng.range(4, 20);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        int x = rng.range(0, n - 1);
        int y = (x + rng.range(1, n - 1)) % n;
        int base = cycle_distance(order, x, y);
        int shift = rng.range(1, n - 1);
        std::vector<int> rotated(order.begin() + shift, order.end());
        rotated.insert(rotated.end(), order.begin(), order.begin() + shift);
        CHECK(cycle_distance(rotated, x, y) == base);
        std::vector<int> reversed(order.rbegin(), order.rend());
        CHECK(cycle_distance(reversed, x, y) == base);
    }
}

TEST_CASE("verify_certificate: C6 accept/reject, K4 accept") {
    Graph c6 = cycle_graph(6);
    CycleCertificate cert;
    cert.order = {0, 1, 2, 3, 4, 5};
    cert.x = 0;
    cert.y = 3;
    cert.claimed_distance = 3;
    CHECK(verify_certificate(c6, cert, 3).ok);
    Verdict bad = verify_certificate(c6, cert, 2);
    CHECK_FALSE(bad.ok);
    CHECK(bad.reason.find("target") != std::string::npos);

    Graph k4 = complete_graph(4);
    CycleCertificate ck4;
    ck4.order = {0, 1, 2, 3};
    ck4.x = 0;
    ck4.y = 2;
    ck4.claimed_distance = 2;
    CHECK(verify_certificate(k4, ck4, 2).ok);
}

TEST_CASE("verify_certificate: structured rejections") {
    Graph c6 = cycle_graph(6);
    CycleCertificate cert;
    cert.order = {0, 1, 2, 3, 4, 5};
    cert.x = 0;
    cert.y = 3;
    cert.claimed_distance = 3;

    CycleCertificate short_order = cert;
    short_order.order.pop_back();
    CHECK_FALSE(verify_certificate(c6, short_order, 3).ok);

    CycleCertificate dup = cert;
    dup.order[5] = 0;
    CHECK_FALSE(verify_certificate(c6, dup, 3).ok);

    CycleCertificate nonedge = cert;
    std::swap(nonedge.order[1], nonedge.order[4]); // breaks consecutive edges
    CHECK_FALSE(verify_certificate(c6, nonedge, 3).ok);
    CHECK(verify_certificate(c6, nonedge, 3).reason.find("edge") != std::string::npos);

    CycleCertificate same = cert;
    same.y = same.x;
    CHECK_FALSE(verify_certificate(c6, same, 3).ok);

    CycleCertificate claim = cert;
    claim.claimed_distance = 2; // inconsistent with its own order
    CHECK_FALSE(verify_certificate(c6, claim, 3).ok);
}
