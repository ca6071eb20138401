#pragma once

#include <cstdint>

#include "hamlocate/graph.hpp"

namespace hamlocate {

// Minimum degree required of a conjecture instance of order n: the smallest
// integer strictly greater than n/2 + 1 - 1, i.e. ceil(n/2 + 1) = ceil((n+2)/2).
inline int dirac_plus_one(int n) { return (n + 3) / 2; } // even n: n/2+1; odd: (n+3)/2

// K_{n/2,n/2}; minimum degree exactly n/2 (sharp: one below the theorem's bound).
Graph gen_sharpness_bipartite(int n);

// (K_{(n-3)/2} ∪ K_{(n-3)/2}) + K_3 for odd n; minimum degree (n+1)/2.
Graph gen_sharpness_split(int n);

// G(n,1/2) repaired upward until min degree >= dirac_plus_one(n) + surplus.
Graph gen_random_dirac(int n, int surplus, std::uint64_t seed);

// Complete bipartite cross between two halves plus intra-side matchings (one
// extra edge when n/2 is odd) plus random intra-side edges at rate `noise`.
// Cut density stays 1; min degree >= n/2+1.
Graph gen_ec1(int n, double noise, std::uint64_t seed);

// Two cliques on the halves plus a sparse random cut at rate `cut_density`,
// repaired so every vertex has >= 2 cross neighbors; min degree >= n/2+1.
Graph gen_ec2(int n, double cut_density, std::uint64_t seed);

// Erdos–Renyi G(n,p), seeded.
Graph gen_gnp(int n, double p, std::uint64_t seed);

// Random bipartite graph with sides {0..a-1}, {a..a+b-1} and cross edges at
// probability p (no intra-side edges).
Graph gen_bipartite_gnp(int a, int b, double p, std::uint64_t seed);

} // namespace hamlocate
