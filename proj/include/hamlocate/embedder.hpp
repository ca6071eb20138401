#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlocate/bitset.hpp"
#include "hamlocate/certificate.hpp"
#include "hamlocate/graph.hpp"
#include "hamlocate/ratio.hpp"

namespace hamlocate {

// A request to cover the bipartite pair (X, Y) by two vertex-disjoint paths
// with prescribed endpoints and prescribed vertex counts.
//
// Invariants (enforced by validate_request):
//   - X and Y are non-empty, disjoint, and of equal size N;
//   - x1, x2 are distinct members of X; y1, y2 are distinct members of Y;
//   - l1 and l2 are even, 4 <= l_i <= 2N - 4, and l1 + l2 == 2N.
//
// Path i runs from x_i to y_i, alternates sides, and has exactly l_i vertices.
struct TwoPathRequest {
  VertexSet x_side;
  VertexSet y_side;
  int x1 = -1;
  int y1 = -1;
  int x2 = -1;
  int y2 = -1;
  int l1 = 0;
  int l2 = 0;
};

// Throws std::invalid_argument when the request violates its invariants
// (including endpoints that do not lie on the declared sides).
void validate_request(const Graph& g, const TwoPathRequest& req);

struct EmbedResult {
  bool ok = false;
  std::vector<int> p1;  // vertices of path 1 in order, p1.front()==x1, p1.back()==y1
  std::vector<int> p2;  // vertices of path 2 in order, p2.front()==x2, p2.back()==y2
  std::string error;    // set when ok == false
};

// Embeds the two requested paths into the pair (X, Y) of g.
//
// The pair is expected to be (eps, delta)-super-regular in the sampled sense;
// the precondition is spot-checked first and a distinct error is reported when
// it fails. The search itself is greedy highest-residual-degree extension with
// rotation repair, `restarts` independent seeded attempts, and the final two
// slots of each path are matched into the prescribed endpoint's neighborhood.
// Requests whose lengths are within 2 of the feasible bounds get a second
// round that builds the complementary split (the other path first).
//
// Success implies the returned paths were re-verified edge by edge against g.
EmbedResult embed_two_paths(const Graph& g, const TwoPathRequest& req,
                            const Ratio& eps, const Ratio& delta,
                            std::uint64_t seed, int restarts = 50);

// Independent verifier: disjointness, exact spanning of X ∪ Y, exact lengths,
// exact endpoint identities, side alternation, and every edge present in g.
Verdict check_two_paths(const Graph& g, const TwoPathRequest& req,
                        const std::vector<int>& p1, const std::vector<int>& p2);

// ---------------------------------------------------------------------------
// Chains: absorption routes for leftover vertices through partner pairs.
// ---------------------------------------------------------------------------

// A u,v-chain visits one partner pair (length 2) or two partner pairs joined
// by a regular link (length 4). `pairs` lists the partner-pair indices in
// order from u to v; length == 2 * pairs.size().
struct Chain {
  int u = -1;
  int v = -1;
  std::vector<int> pairs;
};

// The cluster structure a chain search runs against.
struct ChainWorld {
  const Graph* g = nullptr;
  // Partner pairs (X_i, Y_i).
  std::vector<std::pair<VertexSet, VertexSet>> pairs;
  // linked[i][j] == 1 when (Y_i, X_j) is a usable regular link for i != j.
  std::vector<std::vector<char>> linked;
  // Friendliness threshold as an exact signed fraction: v is friendly to a
  // cluster C when deg(v, C) * thr_den >= thr_num * |C|.
  std::int64_t thr_num = 0;
  std::int64_t thr_den = 1;
  // Per-cluster usage cap: a cluster with `usage` prior chains may join one
  // more only if (usage + 1) * cap.den <= cap.num * cluster_size.
  Ratio cap{1, 10};
};

// Finds the lowest-indexed admissible chain from u to v, preferring length 2.
// `usage_x[i]` / `usage_y[i]` count prior chains through X_i / Y_i and are
// incremented for every cluster of the returned chain. Returns std::nullopt
// when every candidate is inadmissible (unfriendly or at its cap).
std::optional<Chain> find_chain(const ChainWorld& world, int u, int v,
                                std::vector<int>& usage_x,
                                std::vector<int>& usage_y);

}  // namespace hamlocate
