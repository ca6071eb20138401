#include "hamlocate/graph.hpp"

namespace hamlocate {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) {
        if (b.has_edge(u, v)) throw std::invalid_argument("from_edge_list: duplicate edge");
        b.add_edge(u, v);
    }
    return b.build();
}

Density density(const Graph& g, const VertexSet& X, const VertexSet& Y) {
    Density d;
    d.cells = (std::int64_t)X.count() * (std::int64_t)Y.count();
    for (std::size_t v = X.first(); v < X.capacity(); v = X.next(v + 1))
        d.edges += g.neighbors((int)v).and_count(Y);
    return d;
}

Graph complete_graph(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g.build();
}

Graph cycle_graph(int n) {
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

} // namespace hamlocate
