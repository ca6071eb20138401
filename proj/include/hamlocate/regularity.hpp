#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlocate/graph.hpp"
#include "hamlocate/ratio.hpp"

namespace hamlocate {

// Pipeline parameters. All thresholds are exact rationals; every accept/reject
// decision they feed is made with integer cross-multiplication.
//
// The defaults are tuned for the n ~ 1000..2000 working range:
//   - d < 3/64 keeps the reduced-graph independence bound (1/2-8d)l and the
//     disjoint-set bound (1/2-6d)l strictly positive and satisfiable at l = 8;
//   - eps^2 * L >= ~2.25 keeps subset sampling from refuting genuinely
//     half-density pairs at cluster size L >= 100 (the smallest witness subsets
//     have ~0.5/(eps*L) density noise, and the verdict threshold is eps);
//   - alpha = (1/9)^3 keeps the two derived fractions alpha1 = alpha^(1/3) and
//     alpha2 = alpha^(2/3) exact (1/9 and 1/81).
struct Params {
    Ratio eps{3, 20};    // regularity tolerance
    Ratio d{1, 25};      // minimum useful pair density
    Ratio alpha{1, 729}; // extremal-case margin, a perfect cube
    int m0 = 6;          // minimum cluster count
    int sample_trials = 200; // subset samples per pair verdict
    int partition_retries = 8; // re-randomizations per cluster-count candidate
    std::uint64_t seed = 0;

    // Cube root fractions of alpha, exact because alpha is a perfect cube.
    Ratio alpha1() const; // alpha^(1/3)
    Ratio alpha2() const; // alpha^(2/3)

    // Throws std::invalid_argument when the values leave the supported regime:
    // 0 < eps <= 1/4, 0 < d < 3/64, alpha a positive perfect cube with
    // alpha1 <= 1/9, m0 >= 2 even, sample_trials >= 2, partition_retries >= 1.
    void validate() const;
};

enum class RegMode {
    Exhaustive, // iterate every qualifying subset pair (|X|,|Y| <= 16)
    Sampled,    // seeded random subset pairs; refutation is sound, acceptance is evidence
};

// Verdict for one pair. `witness` is populated only on refutation and holds a
// qualifying subset pair whose density deviates from d(X,Y) by at least eps.
struct PairVerdict {
    bool regular = false;
    Density observed;                      // d(X,Y)
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
    Density witness_density;               // density of the witness pair, when present
};

// Decides eps-regularity of the bipartite pair (X,Y) in g.
// pre: X,Y disjoint, nonempty, 0 < eps < 1.
// Exhaustive mode requires |X|,|Y| <= 16 and is a complete decision procedure:
// for each subset A of X with |A| > eps|X| it scans, per qualifying size b, the
// b highest- and b lowest-degree vertices of Y into A (the density extremes).
// Sampled mode draws `trials` subset pairs, half at the smallest qualifying
// size (floor(eps|X|)+1) and half at ceil(|X|/2), and refutes on any deviation
// >= eps; it can only gather evidence for regularity, never prove it.
PairVerdict is_epsilon_regular(const Graph& g, const VertexSet& X, const VertexSet& Y,
                               const Ratio& eps, RegMode mode, int trials = 200,
                               std::uint64_t seed = 0);

// (eps,delta)-super-regularity: eps-regular and every vertex of X has more
// than delta*|Y| neighbors in Y and vice versa (strict, exact arithmetic).
bool is_super_regular(const Graph& g, const VertexSet& X, const VertexSet& Y,
                      const Ratio& eps, const Ratio& delta, RegMode mode,
                      int trials = 200, std::uint64_t seed = 0);

// Slicing: for X' within X and Y' within Y with |X'| >= af*|X| and
// |Y'| >= af*|Y| (af > eps), an eps-regular pair stays eps'-regular on the
// slice with eps' = max(eps/af, 2*eps), and the slice density moves by < eps.
struct SliceResult {
    Ratio eps_prime;
    Density original;  // d(X,Y)
    Density sliced;    // d(X',Y')
    bool deviation_ok; // |d(X',Y') - d(X,Y)| < eps held on these inputs
};

// pre: X' subset of X, Y' subset of Y, |X'| >= af|X|, |Y'| >= af|Y|, af > eps.
SliceResult slice_pair(const Graph& g, const VertexSet& X, const VertexSet& Y,
                       const VertexSet& Xp, const VertexSet& Yp,
                       const Ratio& alpha_fraction, const Ratio& eps);

// Vertex-degree predicate against an exact signed rational threshold:
// deg(v, X) >= (thr_num/thr_den) * |X|. thr_num may be negative (then the
// predicate is vacuously true); thr_den must be positive.
bool friendly(const Graph& g, int v, const VertexSet& X, std::int64_t thr_num,
              std::int64_t thr_den);

// Output of the partitioner: exceptional set V0, l equal-size clusters, and
// the pruned subgraph g' of g obtained by deleting intra-cluster edges and all
// edges of cluster pairs that failed the density or regularity test. Edges
// incident to V0 are kept. pair_kept is an l*l row-major matrix (symmetric,
// diagonal false); pair_density holds the exact G-densities of all pairs.
struct RegularityPartition {
    int n = 0;
    int l = 0;
    int L = 0;
    VertexSet V0;
    std::vector<VertexSet> clusters;
    Graph pruned;
    std::vector<char> pair_kept;
    std::vector<Density> pair_density;
    Params params;

    bool kept(int i, int j) const { return pair_kept[static_cast<std::size_t>(i) * l + j] != 0; }
    const Density& density_of(int i, int j) const {
        return pair_density[static_cast<std::size_t>(i) * l + j];
    }
    int cluster_of(int v) const; // -1 when v is in V0
};

struct PartitionResult {
    std::optional<RegularityPartition> partition;
    std::string error; // set when partition is empty
};

// Builds a certified partition: chooses an even cluster count l >= m0
// (preferring divisors of n so V0 is empty), randomly distributes vertices,
// runs the pair verdicts, prunes, and checks the degree-form contract:
//   (1) |V0| <= eps*n, (2) equal cluster sizes, (3) every vertex keeps
//   deg_{g'}(v) > deg_g(v) - (d+eps)*n, (4) no intra-cluster edges in g',
//   (5) every kept pair is sampled-regular with density > d, every dropped
//       pair has g'-density 0.
// Re-randomizes up to params.partition_retries times per candidate l. Fails
// with a reason when no attempt certifies.
PartitionResult build_partition(const Graph& g, const Params& params);

// Serialization: parameters, cluster membership, pair verdicts and densities.
// Loading rebuilds the pruned graph deterministically from g + membership +
// verdict matrix and re-checks the structural contract.
std::string partition_to_json(const RegularityPartition& p);
RegularityPartition partition_from_json(const Graph& g, const std::string& json_text);

// Reduced graph R: one vertex per cluster, an edge where the pair was kept
// (sampled-regular with density > d).
struct ReducedGraph {
    Graph r;
    int l = 0;
    int L = 0;
};

ReducedGraph reduced_graph(const RegularityPartition& p);

// Structural check on R for the non-extremal route:
//   (a) every independent set of R is smaller than (1/2-8d)*l;
//   (b) no two disjoint vertex sets of size >= (1/2-6d)*l with no edge between.
// Exact for l <= 24 (subset enumeration with pruning); greedy + local-search
// heuristic beyond (a heuristic pass may miss a violation, never invent one).
struct NonextremalCheck {
    bool pass = false;
    std::string reason;            // set on failure
    std::vector<int> witness_a;    // independent set or first side
    std::vector<int> witness_b;    // second side (condition (b) only)
};

NonextremalCheck check_nonextremal_reduced(const ReducedGraph& rg, const Params& params);

// Hamiltonian cycle of the reduced graph via rotation-extension with seeded
// restarts, exact DFS fallback for l <= 24. Returns the cyclic vertex order.
std::optional<std::vector<int>> hamiltonian_cycle_reduced(const ReducedGraph& rg,
                                                          std::uint64_t seed);

} // namespace hamlocate
