#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlocate/bitset.hpp"
#include "hamlocate/certificate.hpp"
#include "hamlocate/graph.hpp"
#include "hamlocate/ratio.hpp"
#include "hamlocate/regularity.hpp"

namespace hamlocate {

// ---------------------------------------------------------------------------
// Instance classification over balanced bipartitions.
// ---------------------------------------------------------------------------

enum class ExtremalKind { NonExtremal, EC1, EC2 };

std::string to_string(ExtremalKind k);

// Result of the bipartition search. Both extreme partitions are always
// populated (they double as starting points for the extremal solvers even
// when the verdict is NonExtremal); `part_a`/`part_b` echo the partition that
// justified an EC verdict and are empty otherwise.
struct ClassifyResult {
    ExtremalKind verdict = ExtremalKind::NonExtremal;
    VertexSet part_a, part_b;
    VertexSet maxcut_a, maxcut_b; // densest balanced cut found
    VertexSet mincut_a, mincut_b; // sparsest balanced cut found
    std::int64_t maxcut_edges = 0;
    std::int64_t mincut_edges = 0;
    bool exact = false; // true when every balanced bipartition was enumerated
};

// Classifies g as EC1 (some balanced cut of density >= 1-alpha), EC2 (some
// balanced cut of density <= alpha) or NonExtremal. Exact enumeration for
// n <= 16; otherwise a swap-ascent heuristic over `effort` seeded restarts
// plus one spectral seed per objective. The heuristic can only misclassify
// toward NonExtremal (it may miss an extreme cut, never invent one).
// pre: n even and >= 4. Throws std::invalid_argument otherwise.
ClassifyResult classify(const Graph& g, const Ratio& alpha, int effort = 50,
                        std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Dense Hamiltonian paths on induced subgraphs.
// ---------------------------------------------------------------------------

// Hamiltonian path from u to v spanning g[sub], by greedy highest-residual-
// degree extension with rotation repair and `restarts` seeded attempts.
// Designed for the dense regime (minimum induced degree above |sub|/2); the
// precondition is not enforced -- outside it the search simply may fail.
// Soft failure: returns nullopt when the budget is exhausted.
// pre: u, v in sub, u != v. Throws std::invalid_argument otherwise.
std::optional<std::vector<int>> hamiltonian_path_dense(const Graph& g,
                                                       const VertexSet& sub,
                                                       int u, int v,
                                                       std::uint64_t seed,
                                                       int restarts = 50);

// ---------------------------------------------------------------------------
// Solver outcome plumbing.
// ---------------------------------------------------------------------------

struct StageNote {
    std::string stage;
    double ms = 0.0;
    std::string note;
};

// Outcome of one constructive solver run. On failure `stage` names the first
// pipeline stage that could not complete and `detail` says why; the stage log
// records what was attempted either way.
struct SolveOutcome {
    bool ok = false;
    CycleCertificate cert;
    std::string stage;
    std::string detail;
    std::vector<StageNote> stages;
};

// ---------------------------------------------------------------------------
// Constructive solvers. All targets are distance floor(n/2) between x and y
// on a Hamiltonian cycle; every success is re-verified internally before the
// outcome reports ok.
// ---------------------------------------------------------------------------

// Non-extremal route: regularity partition, reduced-graph cycle, connector
// plan, per-pair two-path embeddings, leftover absorption by edge splicing.
// pre: n even, x != y. Complete graphs short-circuit to a direct construction.
SolveOutcome solve_nonextremal(const Graph& g, int x, int y,
                               const Params& params, std::uint64_t seed);

// Near-bipartite route. (v1, v2) is a balanced bipartition whose cut density
// is close to 1 (as certified by classify); the solver derives the working
// sides, strings low-cross-degree vertices into short protected paths, and
// closes the cycle with two prescribed-length alternating paths.
// pre: n even, x != y, |v1| == |v2| == n/2 partitioning 0..n-1.
SolveOutcome solve_ec1(const Graph& g, int x, int y, const VertexSet& v1,
                       const VertexSet& v2, const Params& params,
                       std::uint64_t seed);

// Near-split route. (v1, v2) is a balanced bipartition whose cut density is
// close to 0; the solver builds one spanning path per side and joins them
// across the cut.
// pre: n even, x != y, |v1| == |v2| == n/2 partitioning 0..n-1.
SolveOutcome solve_ec2(const Graph& g, int x, int y, const VertexSet& v1,
                       const VertexSet& v2, const Params& params,
                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// Odd orders: delete-solve-splice reduction.
// ---------------------------------------------------------------------------

// Splices v into the cycle (which spans all vertices of g except v) between
// two consecutive co-neighbors of v, searching the arc between x and y with
// more edges first (lowest cycle index wins within an arc) so the cycle
// distance of (x, y) is preserved whenever any valid slot exists there.
// Returns nullopt when no two consecutive cycle vertices are both neighbors
// of v.
std::optional<std::vector<int>> reinsert_vertex(const Graph& g,
                                                const std::vector<int>& cycle,
                                                int v, int x, int y);

// ---------------------------------------------------------------------------
// Dispatch: validation, classification, solver cascade, reporting.
// ---------------------------------------------------------------------------

struct DispatchConfig {
    Params params;                 // regularity/solver parameters
    Ratio classify_alpha{1, 20};   // admission margin for the EC routes
    int classify_effort = 50;      // classifier restarts
    int small_cutoff = 14;         // n <= small_cutoff: exhaustive search only
    int oracle_max = 18;           // last-resort exhaustive bound for larger n
    bool allow_direct = true;      // dense split-and-stitch fallback
    std::uint64_t seed = 0;
};

struct SolveReport {
    bool success = false;
    std::string method;   // solver that produced the certificate
    std::string classify_label; // classifier verdict, when one was run
    std::string failure;  // reason, when success == false
    int n = 0;
    int x = -1;
    int y = -1;
    int target = 0;
    bool verified = false;
    std::optional<CycleCertificate> certificate;
    std::vector<StageNote> stages;
    std::uint64_t seed = 0;
    double total_ms = 0.0;
};

std::string report_to_json(const SolveReport& r);

// Full solving pipeline:
//   - contract validation (x != y, minimum degree at least the theorem bound),
//   - n <= small_cutoff: exhaustive search,
//   - odd n: reduce_odd (delete the highest-id vertex outside {x,y}, solve
//     the even instance, splice the vertex back on the long arc),
//   - even n: classify, then the matching constructive solver, then the
//     remaining constructive solvers, then the dense direct fallback, then
//     the exhaustive search when n <= oracle_max.
// Every certificate is re-verified before the report claims success; a
// solver whose output fails verification counts as a failed attempt.
SolveReport dispatch(const Graph& g, int x, int y, const DispatchConfig& cfg);

// The odd-order reduction as a standalone operation (also used by dispatch).
// pre: n odd; x != y.
SolveReport reduce_odd(const Graph& g, int x, int y, const DispatchConfig& cfg);

} // namespace hamlocate
