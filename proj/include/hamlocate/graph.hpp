#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamlocate/bitset.hpp"
#include "hamlocate/ratio.hpp"

namespace hamlocate {

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..n-1, adjacency stored as
// one VertexSet row per vertex.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }
    std::int64_t m() const { return m_; }

    bool has_edge(int u, int v) const { return rows_[(std::size_t)u].test((std::size_t)v); }
    const VertexSet& neighbors(int v) const { return rows_[(std::size_t)v]; }
    int degree(int v) const { return deg_[(std::size_t)v]; }
    int min_degree() const {
        int d = n_ == 0 ? 0 : deg_[0];
        for (int v : deg_) if (v < d) d = v;
        return d;
    }

    // Number of neighbors of v inside X.
    int degree_into(int v, const VertexSet& X) const {
        return (int)rows_[(std::size_t)v].and_count(X);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve((std::size_t)m_);
        for (int u = 0; u < n_; ++u)
            for (std::size_t v = rows_[(std::size_t)u].next((std::size_t)u + 1); v < (std::size_t)n_;
                 v = rows_[(std::size_t)u].next(v + 1))
                out.emplace_back(u, (int)v);
        return out;
    }

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<VertexSet> rows_;
    std::vector<int> deg_;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n), rows_((std::size_t)n, VertexSet((std::size_t)n)) {
        if (n < 0) throw std::invalid_argument("GraphBuilder: negative order");
    }

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return rows_[(std::size_t)u].test((std::size_t)v); }

    void add_edge(int u, int v) {
        check(u); check(v);
        if (u == v) throw std::invalid_argument("add_edge: self-loop");
        rows_[(std::size_t)u].set((std::size_t)v);
        rows_[(std::size_t)v].set((std::size_t)u);
    }

    void remove_edge(int u, int v) {
        check(u); check(v);
        rows_[(std::size_t)u].reset((std::size_t)v);
        rows_[(std::size_t)v].reset((std::size_t)u);
    }

    Graph build() const {
        Graph g;
        g.n_ = n_;
        g.rows_ = rows_;
        g.deg_.resize((std::size_t)n_);
        std::int64_t twice = 0;
        for (int v = 0; v < n_; ++v) {
            g.deg_[(std::size_t)v] = (int)rows_[(std::size_t)v].count();
            twice += g.deg_[(std::size_t)v];
        }
        g.m_ = twice / 2;
        return g;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("GraphBuilder: vertex out of range");
    }
    int n_ = 0;
    std::vector<VertexSet> rows_;
};

// Exact pair density: edge count across (X, Y) over |X||Y|. For overlapping or
// equal sets the crossing count follows the same sum-over-X convention used by
// the regularity machinery (X, Y disjoint in all real call sites).
struct Density {
    std::int64_t edges = 0;
    std::int64_t cells = 0; // |X| * |Y|

    double to_double() const { return cells == 0 ? 0.0 : (double)edges / (double)cells; }
    bool gt(const Ratio& r) const { return frac_gt(edges, cells, r.num, r.den); }
    bool ge(const Ratio& r) const { return frac_ge(edges, cells, r.num, r.den); }
    bool lt(const Ratio& r) const { return frac_lt(edges, cells, r.num, r.den); }
};

Density density(const Graph& g, const VertexSet& X, const VertexSet& Y);

// Convenience constructions used across tests and generators.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b); // sides {0..a-1}, {a..a+b-1}
Graph cycle_graph(int n);

} // namespace hamlocate
