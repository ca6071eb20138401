#pragma once

#include <cstdint>
#include <optional>

#include "hamlocate/certificate.hpp"
#include "hamlocate/graph.hpp"

namespace hamlocate {

// Limits for the exhaustive search. Exceeding either limit surfaces as status
// Exhausted — never as a silent Absent.
struct SearchBudget {
    std::optional<std::int64_t> node_limit;
    std::optional<double> time_limit_ms;
    bool connectivity_pruning = true;
};

enum class SearchStatus { Found, Absent, Exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<CycleCertificate> certificate;
    std::int64_t nodes = 0;
    double elapsed_ms = 0.0;
};

// Exhaustive backtracking search for a Hamiltonian cycle with cycle distance
// exactly d between x and y. x is fixed at position 0; y may occupy only
// positions d and n-d; neighbors are explored in ascending id; pruning by
// remaining-degree requirement and (optionally) connectivity of the unvisited
// set. Both arcs between x and y are explored.
SearchResult find_cycle_with_distance(const Graph& g, int x, int y, int d,
                                      const SearchBudget& budget = {});

} // namespace hamlocate
