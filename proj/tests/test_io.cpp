#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "hamlocate/generators.hpp"
#include "hamlocate/io.hpp"

using namespace hamlocate;

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            if (a.has_edge(u, v) != b.has_edge(u, v)) return false;
    return true;
}

} // namespace

TEST_CASE("graph6: K4 encodes to C~") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(same_graph(from_graph6("C~"), complete_graph(4)));
}

TEST_CASE("graph6: known tiny encodings") {
    // Empty graph on 5 vertices: 10 zero bits -> two zero data bytes '??'.
    CHECK(to_graph6(Graph::from_edge_list(5, {})) == "D??");
    // P4 = path 0-1-2-3: bits (0,1)=1,(0,2)=0,(1,2)=1,(0,3)=0,(1,3)=0,(2,3)=1
    // -> 101001 = 41 -> 'h'; n=4 -> 'C'.
    CHECK(to_graph6(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
    CHECK(same_graph(from_graph6("Ch"), Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("graph6 round trip, small and large n") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = gen_gnp(30, 0.4, seed);
        CHECK(same_graph(from_graph6(to_graph6(g)), g));
    }
    Graph big = gen_gnp(100, 0.3, 9); // exercises the '~' 3-byte order prefix
    std::string enc = to_graph6(big);
    CHECK(enc[0] == '~');
    CHECK(same_graph(from_graph6(enc), big));
}

TEST_CASE("graph6 accepts optional header and trailing newline") {
    std::string enc = ">>graph6<<" + to_graph6(complete_graph(4)) + "\n";
    CHECK(same_graph(from_graph6(enc), complete_graph(4)));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS(from_graph6(""));
    CHECK_THROWS(from_graph6("C"));      // truncated bits
    CHECK_THROWS(from_graph6("C\x01")); // bad data byte
}

TEST_CASE("edge list text round trip") {
    Graph g = gen_gnp(25, 0.5, 4);
    CHECK(same_graph(from_edge_list_text(to_edge_list_text(g)), g));
    CHECK_THROWS(from_edge_list_text(""));
}

TEST_CASE("file round trip in both formats") {
    namespace fs = std::filesystem;
    Graph g = gen_gnp(20, 0.4, 5);
    fs::path dir = fs::temp_directory_path();
    std::string p6 = (dir / "hamlocate_test_roundtrip.g6").string();
    std::string pel = (dir / "hamlocate_test_roundtrip.txt").string();
    write_graph_file(g, p6);
    write_graph_file(g, pel);
    CHECK(same_graph(read_graph_file(p6), g));
    CHECK(same_graph(read_graph_file(pel), g));
    std::remove(p6.c_str());
    std::remove(pel.c_str());
}

TEST_CASE("certificate JSON round trip") {
    CycleCertificate c;
    c.order = {0, 2, 1, 3};
    c.x = 0;
    c.y = 1;
    c.claimed_distance = 2;
    CycleCertificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back.order == c.order);
    CHECK(back.x == c.x);
    CHECK(back.y == c.y);
    CHECK(back.claimed_distance == c.claimed_distance);
    CHECK_THROWS(certificate_from_json("{\"x\":1}"));
}
