#pragma once

#include <string>
#include <vector>

#include "hamlocate/graph.hpp"

namespace hamlocate {

// Relabel: vertex at position i of `order` becomes vertex i.
Graph relabel(const Graph& g, const std::vector<int>& order);

// Ordering of V(g) that minimizes the adjacency bitstring read in graph6 bit
// order (upper triangle, column-major). Isomorphic graphs map to identical
// relabeled graphs. Supported for n <= 64.
std::vector<int> canonical_order(const Graph& g);

// graph6 string of the canonically relabeled graph; equal iff isomorphic.
std::string canonical_g6(const Graph& g);

Graph complement_graph(const Graph& g);

} // namespace hamlocate
