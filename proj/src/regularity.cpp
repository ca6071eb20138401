#include "hamlocate/regularity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hamlocate/rng.hpp"
#include "json.hpp"

namespace hamlocate {

namespace {

// Exact integer cube root, or -1 when x is not a perfect cube.
std::int64_t exact_cbrt(std::int64_t x) {
    if (x <= 0) return -1;
    std::int64_t r = (std::int64_t)std::llround(std::cbrt((double)x));
    for (std::int64_t c = std::max<std::int64_t>(1, r - 2); c <= r + 2; ++c)
        if (c * c * c == x) return c;
    return -1;
}

// Smallest integer a with a > r * size (qualifying subset size).
int qualify_min(const Ratio& r, int size) {
    return (int)((__int128)r.num * size / r.den) + 1;
}

std::int64_t edges_between(const Graph& g, const VertexSet& A, const VertexSet& B) {
    std::int64_t e = 0;
    for (std::size_t v = A.first(); v < A.capacity(); v = A.next(v + 1))
        e += (std::int64_t)g.neighbors((int)v).and_count(B);
    return e;
}

std::vector<int> sample_subset(Rng& rng, std::vector<int>& pool, int s) {
    for (int i = 0; i < s; ++i) {
        int j = rng.range(i, (int)pool.size() - 1);
        std::swap(pool[(std::size_t)i], pool[(std::size_t)j]);
    }
    return std::vector<int>(pool.begin(), pool.begin() + s);
}

PairVerdict regular_exhaustive(const Graph& g, const VertexSet& X, const VertexSet& Y,
                               const Ratio& eps) {
    std::vector<int> xs = X.to_vector();
    std::vector<int> ys = Y.to_vector();
    const int nx = (int)xs.size();
    const int ny = (int)ys.size();
    if (nx > 16 || ny > 16)
        throw std::invalid_argument("is_epsilon_regular: exhaustive mode requires sides <= 16");

    PairVerdict out;
    const std::int64_t total = edges_between(g, X, Y);
    const std::int64_t cells = (std::int64_t)nx * ny;
    out.observed = Density{total, cells};

    // Row masks: bit i of row[j] = adjacency between ys[j] and xs[i].
    std::vector<std::uint32_t> row((std::size_t)ny, 0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            if (g.has_edge(ys[(std::size_t)j], xs[(std::size_t)i]))
                row[(std::size_t)j] |= 1u << i;

    const int a_min = qualify_min(eps, nx);
    const int b_min = qualify_min(eps, ny);
    std::vector<std::pair<int, int>> deg_id((std::size_t)ny); // (deg into A, index into ys)
    std::vector<std::int64_t> prefix((std::size_t)ny + 1, 0);

    for (std::uint32_t mask = 1; mask < (1u << nx); ++mask) {
        const int a = std::popcount(mask);
        if (a < a_min) continue;
        for (int j = 0; j < ny; ++j)
            deg_id[(std::size_t)j] = {std::popcount(row[(std::size_t)j] & mask), j};
        std::sort(deg_id.begin(), deg_id.end());
        for (int j = 0; j < ny; ++j)
            prefix[(std::size_t)j + 1] = prefix[(std::size_t)j] + deg_id[(std::size_t)j].first;
        const std::int64_t all = prefix[(std::size_t)ny];
        for (int b = b_min; b <= ny; ++b) {
            const std::int64_t lo = prefix[(std::size_t)b];
            const std::int64_t hi = all - prefix[(std::size_t)(ny - b)];
            const std::int64_t sub_cells = (std::int64_t)a * b;
            for (int side = 0; side < 2; ++side) {
                const std::int64_t e = side == 0 ? lo : hi;
                if (deviation_lt(e, sub_cells, total, cells, eps)) continue;
                std::vector<int> wa, wb;
                for (int i = 0; i < nx; ++i)
                    if (mask & (1u << i)) wa.push_back(xs[(std::size_t)i]);
                if (side == 0)
                    for (int j = 0; j < b; ++j)
                        wb.push_back(ys[(std::size_t)deg_id[(std::size_t)j].second]);
                else
                    for (int j = ny - b; j < ny; ++j)
                        wb.push_back(ys[(std::size_t)deg_id[(std::size_t)j].second]);
                std::sort(wb.begin(), wb.end());
                out.regular = false;
                out.witness = {std::move(wa), std::move(wb)};
                out.witness_density = Density{e, sub_cells};
                return out;
            }
        }
    }
    out.regular = true;
    return out;
}

PairVerdict regular_sampled(const Graph& g, const VertexSet& X, const VertexSet& Y,
                            const Ratio& eps, int trials, std::uint64_t seed) {
    std::vector<int> xs = X.to_vector();
    std::vector<int> ys = Y.to_vector();
    const int nx = (int)xs.size();
    const int ny = (int)ys.size();

    PairVerdict out;
    const std::int64_t total = edges_between(g, X, Y);
    const std::int64_t cells = (std::int64_t)nx * ny;
    out.observed = Density{total, cells};

    const int sa_min = std::min(nx, qualify_min(eps, nx));
    const int sb_min = std::min(ny, qualify_min(eps, ny));
    const int sa_half = (nx + 1) / 2;
    const int sb_half = (ny + 1) / 2;

    Rng rng(seed);
    const std::size_t n = X.capacity();
    for (int t = 0; t < trials; ++t) {
        const bool minimal = t < trials / 2;
        const int sa = minimal ? sa_min : sa_half;
        const int sb = minimal ? sb_min : sb_half;
        std::vector<int> a_ids = sample_subset(rng, xs, sa);
        std::vector<int> b_ids = sample_subset(rng, ys, sb);
        VertexSet A = VertexSet::of(n, a_ids);
        VertexSet B = VertexSet::of(n, b_ids);
        const std::int64_t e = edges_between(g, A, B);
        const std::int64_t sub_cells = (std::int64_t)sa * sb;
        if (!deviation_lt(e, sub_cells, total, cells, eps)) {
            std::sort(a_ids.begin(), a_ids.end());
            std::sort(b_ids.begin(), b_ids.end());
            out.regular = false;
            out.witness = {std::move(a_ids), std::move(b_ids)};
            out.witness_density = Density{e, sub_cells};
            return out;
        }
    }
    out.regular = true;
    return out;
}

} // namespace

Ratio Params::alpha1() const {
    std::int64_t cn = exact_cbrt(alpha.num);
    std::int64_t cd = exact_cbrt(alpha.den);
    if (cn < 0 || cd < 0)
        throw std::invalid_argument("Params: alpha must be a perfect cube of a rational");
    return Ratio(cn, cd);
}

Ratio Params::alpha2() const {
    Ratio a1 = alpha1();
    return Ratio(a1.num * a1.num, a1.den * a1.den);
}

void Params::validate() const {
    if (eps.num <= 0 || !(eps <= Ratio(1, 4)))
        throw std::invalid_argument("Params: eps must lie in (0, 1/4]");
    if (d.num <= 0 || !(d < Ratio(3, 64)))
        throw std::invalid_argument("Params: d must lie in (0, 3/64)");
    Ratio a1 = alpha1(); // throws unless alpha is a perfect cube
    if (!(a1 <= Ratio(1, 9)))
        throw std::invalid_argument("Params: alpha^(1/3) must be at most 1/9");
    if (m0 < 2 || m0 % 2 != 0)
        throw std::invalid_argument("Params: m0 must be even and at least 2");
    if (sample_trials < 2) throw std::invalid_argument("Params: sample_trials must be >= 2");
    if (partition_retries < 1)
        throw std::invalid_argument("Params: partition_retries must be >= 1");
}

PairVerdict is_epsilon_regular(const Graph& g, const VertexSet& X, const VertexSet& Y,
                               const Ratio& eps, RegMode mode, int trials,
                               std::uint64_t seed) {
    if (X.empty() || Y.empty())
        throw std::invalid_argument("is_epsilon_regular: empty side");
    if (X.intersects(Y))
        throw std::invalid_argument("is_epsilon_regular: sides must be disjoint");
    if (eps.num <= 0 || !(eps < Ratio(1, 1)))
        throw std::invalid_argument("is_epsilon_regular: eps must lie in (0, 1)");
    if (mode == RegMode::Exhaustive) return regular_exhaustive(g, X, Y, eps);
    return regular_sampled(g, X, Y, eps, trials, seed);
}

bool is_super_regular(const Graph& g, const VertexSet& X, const VertexSet& Y,
                      const Ratio& eps, const Ratio& delta, RegMode mode, int trials,
                      std::uint64_t seed) {
    const std::int64_t ny = (std::int64_t)Y.count();
    const std::int64_t nx = (std::int64_t)X.count();
    for (std::size_t v = X.first(); v < X.capacity(); v = X.next(v + 1))
        if (!count_gt(g.degree_into((int)v, Y), delta, ny)) return false;
    for (std::size_t v = Y.first(); v < Y.capacity(); v = Y.next(v + 1))
        if (!count_gt(g.degree_into((int)v, X), delta, nx)) return false;
    return is_epsilon_regular(g, X, Y, eps, mode, trials, seed).regular;
}

SliceResult slice_pair(const Graph& g, const VertexSet& X, const VertexSet& Y,
                       const VertexSet& Xp, const VertexSet& Yp,
                       const Ratio& alpha_fraction, const Ratio& eps) {
    auto subset_of = [](const VertexSet& a, const VertexSet& b) {
        VertexSet t = a;
        t.subtract(b);
        return t.empty();
    };
    if (!subset_of(Xp, X) || !subset_of(Yp, Y))
        throw std::invalid_argument("slice_pair: slices must be subsets");
    if (!(eps < alpha_fraction))
        throw std::invalid_argument("slice_pair: alpha_fraction must exceed eps");
    if (!count_ge((std::int64_t)Xp.count(), alpha_fraction, (std::int64_t)X.count()) ||
        !count_ge((std::int64_t)Yp.count(), alpha_fraction, (std::int64_t)Y.count()))
        throw std::invalid_argument("slice_pair: slices smaller than alpha_fraction of sides");

    Ratio quotient(eps.num * alpha_fraction.den, eps.den * alpha_fraction.num);
    Ratio doubled(2 * eps.num, eps.den);
    SliceResult out;
    out.eps_prime = quotient < doubled ? doubled : quotient;
    out.original = density(g, X, Y);
    out.sliced = density(g, Xp, Yp);
    out.deviation_ok = deviation_lt(out.sliced.edges, out.sliced.cells, out.original.edges,
                                    out.original.cells, eps);
    return out;
}

bool friendly(const Graph& g, int v, const VertexSet& X, std::int64_t thr_num,
              std::int64_t thr_den) {
    if (thr_den <= 0) throw std::invalid_argument("friendly: threshold denominator must be positive");
    if (v < 0 || v >= g.n()) throw std::out_of_range("friendly: vertex out of range");
    const std::int64_t deg = g.degree_into(v, X);
    const std::int64_t size = (std::int64_t)X.count();
    return (__int128)deg * thr_den >= (__int128)thr_num * size;
}

int RegularityPartition::cluster_of(int v) const {
    for (int i = 0; i < l; ++i)
        if (clusters[(std::size_t)i].test((std::size_t)v)) return i;
    return -1;
}

namespace {

// Candidate cluster counts: even l in [m0, 64], divisors of n first (ascending,
// so V0 stays empty and L is as large as possible), then non-divisors.
std::vector<int> cluster_count_candidates(int n, int m0) {
    std::vector<int> divisors, others;
    for (int l = m0; l <= std::min(n / 2, 64); l += 2) {
        if (n / l < 2) break;
        (n % l == 0 ? divisors : others).push_back(l);
    }
    std::vector<int> out = divisors;
    out.insert(out.end(), others.begin(), others.end());
    if (out.size() > 6) out.resize(6);
    return out;
}

Graph prune_graph(const Graph& g, const std::vector<int>& cluster_index,
                  const std::vector<char>& pair_kept, int l) {
    GraphBuilder b(g.n());
    for (const auto& [u, v] : g.edges()) {
        const int cu = cluster_index[(std::size_t)u];
        const int cv = cluster_index[(std::size_t)v];
        if (cu < 0 || cv < 0) {
            b.add_edge(u, v); // edges at the exceptional set are kept
        } else if (cu != cv && pair_kept[(std::size_t)cu * l + cv]) {
            b.add_edge(u, v);
        }
    }
    return b.build();
}

// Contract property (3): deg_{g'}(v) > deg_g(v) - (d+eps)*n for every v.
bool degree_loss_ok(const Graph& g, const Graph& pruned, const Params& p, int* bad) {
    const std::int64_t num = p.d.num * p.eps.den + p.eps.num * p.d.den;
    const std::int64_t den = p.d.den * p.eps.den;
    for (int v = 0; v < g.n(); ++v) {
        const std::int64_t loss = g.degree(v) - pruned.degree(v);
        if (!((__int128)loss * den < (__int128)num * g.n())) {
            if (bad) *bad = v;
            return false;
        }
    }
    return true;
}

} // namespace

PartitionResult build_partition(const Graph& g, const Params& params) {
    params.validate();
    const int n = g.n();
    if (n < 2 * params.m0)
        return {std::nullopt, "graph too small to partition into m0 clusters"};

    std::string last_error = "no admissible cluster count";
    for (int l : cluster_count_candidates(n, params.m0)) {
        const int L = n / l;
        const int rem = n - l * L;
        if (count_gt(rem, params.eps, n)) {
            last_error = "exceptional set would exceed eps*n";
            continue;
        }
        for (int retry = 0; retry < params.partition_retries; ++retry) {
            Rng rng(derive_seed(params.seed, "partition", ((std::uint64_t)l << 32) | (unsigned)retry));
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);

            RegularityPartition part;
            part.n = n;
            part.l = l;
            part.L = L;
            part.params = params;
            part.V0 = VertexSet((std::size_t)n);
            std::vector<int> cluster_index((std::size_t)n, -1);
            for (int i = 0; i < rem; ++i) part.V0.set((std::size_t)perm[(std::size_t)i]);
            part.clusters.assign((std::size_t)l, VertexSet((std::size_t)n));
            for (int c = 0; c < l; ++c)
                for (int k = 0; k < L; ++k) {
                    const int v = perm[(std::size_t)(rem + c * L + k)];
                    part.clusters[(std::size_t)c].set((std::size_t)v);
                    cluster_index[(std::size_t)v] = c;
                }

            part.pair_kept.assign((std::size_t)l * l, 0);
            part.pair_density.assign((std::size_t)l * l, Density{});
            for (int i = 0; i < l; ++i)
                for (int j = i + 1; j < l; ++j) {
                    const Density dij =
                        density(g, part.clusters[(std::size_t)i], part.clusters[(std::size_t)j]);
                    char kept = 0;
                    if (dij.gt(params.d)) {
                        const std::uint64_t pair_seed = derive_seed(
                            params.seed, "pair-verdict",
                            ((std::uint64_t)l << 48) | ((std::uint64_t)retry << 40) |
                                ((std::uint64_t)i << 20) | (unsigned)j);
                        kept = is_epsilon_regular(g, part.clusters[(std::size_t)i],
                                                  part.clusters[(std::size_t)j], params.eps,
                                                  RegMode::Sampled, params.sample_trials,
                                                  pair_seed)
                                   .regular
                                   ? 1
                                   : 0;
                    }
                    part.pair_kept[(std::size_t)i * l + j] = kept;
                    part.pair_kept[(std::size_t)j * l + i] = kept;
                    part.pair_density[(std::size_t)i * l + j] = dij;
                    part.pair_density[(std::size_t)j * l + i] = dij;
                }

            part.pruned = prune_graph(g, cluster_index, part.pair_kept, l);
            int bad = -1;
            if (!degree_loss_ok(g, part.pruned, params, &bad)) {
                last_error = "vertex " + std::to_string(bad) +
                             " loses at least (d+eps)*n edges under pruning";
                continue;
            }
            return {std::move(part), ""};
        }
    }
    return {std::nullopt, last_error};
}

std::string partition_to_json(const RegularityPartition& p) {
    nlohmann::json j;
    auto ratio_str = [](const Ratio& r) {
        return std::to_string(r.num) + "/" + std::to_string(r.den);
    };
    j["params"] = {{"eps", ratio_str(p.params.eps)},
                   {"d", ratio_str(p.params.d)},
                   {"alpha", ratio_str(p.params.alpha)},
                   {"m0", p.params.m0},
                   {"sample_trials", p.params.sample_trials},
                   {"partition_retries", p.params.partition_retries},
                   {"seed", p.params.seed}};
    j["n"] = p.n;
    j["l"] = p.l;
    j["L"] = p.L;
    j["V0"] = p.V0.to_vector();
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : p.clusters) cl.push_back(c.to_vector());
    j["clusters"] = std::move(cl);
    nlohmann::json pairs = nlohmann::json::array();
    for (int i = 0; i < p.l; ++i)
        for (int jj = i + 1; jj < p.l; ++jj) {
            const Density& d = p.density_of(i, jj);
            pairs.push_back({{"i", i},
                             {"j", jj},
                             {"kept", p.kept(i, jj)},
                             {"edges", d.edges},
                             {"cells", d.cells}});
        }
    j["pairs"] = std::move(pairs);
    return j.dump(2);
}

RegularityPartition partition_from_json(const Graph& g, const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    RegularityPartition p;
    p.n = j.at("n").get<int>();
    if (p.n != g.n()) throw std::invalid_argument("partition_from_json: graph order mismatch");
    p.l = j.at("l").get<int>();
    p.L = j.at("L").get<int>();
    const auto& jp = j.at("params");
    p.params.eps = Ratio::parse(jp.at("eps").get<std::string>());
    p.params.d = Ratio::parse(jp.at("d").get<std::string>());
    p.params.alpha = Ratio::parse(jp.at("alpha").get<std::string>());
    p.params.m0 = jp.at("m0").get<int>();
    p.params.sample_trials = jp.at("sample_trials").get<int>();
    p.params.partition_retries = jp.at("partition_retries").get<int>();
    p.params.seed = jp.at("seed").get<std::uint64_t>();

    p.V0 = VertexSet::of((std::size_t)p.n, j.at("V0").get<std::vector<int>>());
    std::vector<int> cluster_index((std::size_t)p.n, -1);
    int covered = (int)p.V0.count();
    for (const auto& arr : j.at("clusters")) {
        const auto ids = arr.get<std::vector<int>>();
        if ((int)ids.size() != p.L)
            throw std::invalid_argument("partition_from_json: cluster size mismatch");
        for (int v : ids) {
            if (v < 0 || v >= p.n || cluster_index[(std::size_t)v] != -1 ||
                p.V0.test((std::size_t)v))
                throw std::invalid_argument("partition_from_json: clusters must partition V");
            cluster_index[(std::size_t)v] = (int)p.clusters.size();
        }
        p.clusters.push_back(VertexSet::of((std::size_t)p.n, ids));
        covered += (int)ids.size();
    }
    if ((int)p.clusters.size() != p.l || covered != p.n)
        throw std::invalid_argument("partition_from_json: membership does not cover V");

    p.pair_kept.assign((std::size_t)p.l * p.l, 0);
    p.pair_density.assign((std::size_t)p.l * p.l, Density{});
    for (const auto& e : j.at("pairs")) {
        const int i = e.at("i").get<int>();
        const int jj = e.at("j").get<int>();
        if (i < 0 || jj < 0 || i >= p.l || jj >= p.l || i == jj)
            throw std::invalid_argument("partition_from_json: bad pair index");
        const char kept = e.at("kept").get<bool>() ? 1 : 0;
        const Density d{e.at("edges").get<std::int64_t>(), e.at("cells").get<std::int64_t>()};
        const Density actual =
            density(g, p.clusters[(std::size_t)i], p.clusters[(std::size_t)jj]);
        if (actual.edges != d.edges || actual.cells != d.cells)
            throw std::invalid_argument("partition_from_json: stored pair density disagrees with graph");
        p.pair_kept[(std::size_t)i * p.l + jj] = kept;
        p.pair_kept[(std::size_t)jj * p.l + i] = kept;
        p.pair_density[(std::size_t)i * p.l + jj] = d;
        p.pair_density[(std::size_t)jj * p.l + i] = d;
    }
    p.pruned = prune_graph(g, cluster_index, p.pair_kept, p.l);
    int bad = -1;
    if (!degree_loss_ok(g, p.pruned, p.params, &bad))
        throw std::invalid_argument("partition_from_json: degree-loss contract fails at vertex " +
                                    std::to_string(bad));
    return p;
}

ReducedGraph reduced_graph(const RegularityPartition& p) {
    GraphBuilder b(p.l);
    for (int i = 0; i < p.l; ++i)
        for (int j = i + 1; j < p.l; ++j)
            if (p.kept(i, j)) b.add_edge(i, j);
    return ReducedGraph{b.build(), p.l, p.L};
}

namespace {

// Exact maximum independent set for small graphs, branch and bound on masks.
int mis_exact(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int depth,
              std::uint64_t picked, std::uint64_t* best_set, int best) {
    if (cand == 0) {
        if (depth > best && best_set) *best_set = picked;
        return depth;
    }
    if (depth + std::popcount(cand) <= best) return best; // cannot beat best
    const int v = std::countr_zero(cand);
    const std::uint64_t bit = 1ull << v;
    // Branch 1: take v.
    int with_v = mis_exact(adj, cand & ~(adj[(std::size_t)v] | bit), depth + 1, picked | bit,
                           best_set, best);
    best = std::max(best, with_v);
    // Branch 2: skip v.
    int without = mis_exact(adj, cand & ~bit, depth, picked, best_set, best);
    return std::max(best, without);
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj((std::size_t)g.n(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[(std::size_t)u] |= 1ull << v;
        adj[(std::size_t)v] |= 1ull << u;
    }
    return adj;
}

// Greedy independent set from a vertex order.
std::uint64_t greedy_is(const std::vector<std::uint64_t>& adj, const std::vector<int>& order) {
    std::uint64_t picked = 0, blocked = 0;
    for (int v : order) {
        const std::uint64_t bit = 1ull << v;
        if (blocked & bit) continue;
        picked |= bit;
        blocked |= bit | adj[(std::size_t)v];
    }
    return picked;
}

std::vector<int> mask_to_ids(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        const int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

} // namespace

NonextremalCheck check_nonextremal_reduced(const ReducedGraph& rg, const Params& params) {
    NonextremalCheck out;
    const int l = rg.l;
    if (l < 1 || l > 64) {
        out.reason = "reduced graph order out of range";
        return out;
    }
    const auto adj = adjacency_masks(rg.r);

    // Condition (a): alpha(R) < (1/2 - 8d) * l, i.e. every independent set s
    // satisfies s * 2 * d.den < (d.den - 16 d.num) * l.
    const std::int64_t ind_num = (params.d.den - 16 * params.d.num) * l;
    const std::int64_t ind_den = 2 * params.d.den;
    std::uint64_t best_set = 0;
    int alpha_found;
    if (l <= 24) {
        alpha_found = mis_exact(adj, l == 64 ? ~0ull : ((1ull << l) - 1), 0, 0, &best_set, 0);
    } else {
        alpha_found = 0;
        std::vector<int> order((std::size_t)l);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(adj[(std::size_t)a]) < std::popcount(adj[(std::size_t)b]);
        });
        Rng rng(derive_seed(params.seed, "mis-heuristic", (std::uint64_t)l));
        for (int t = 0; t < 200; ++t) {
            const std::uint64_t got = greedy_is(adj, order);
            if (std::popcount(got) > alpha_found) {
                alpha_found = std::popcount(got);
                best_set = got;
            }
            rng.shuffle(order);
        }
    }
    if (!((__int128)alpha_found * ind_den < (__int128)ind_num)) {
        out.reason = "independent set of size " + std::to_string(alpha_found) +
                     " reaches (1/2-8d)*l";
        out.witness_a = mask_to_ids(best_set);
        return out;
    }

    // Condition (b): no disjoint A, B with |A|,|B| >= (1/2-6d)*l and e(A,B)=0.
    // Smallest qualifying size s0 = ceil((d.den - 12 d.num) * l / (2 d.den)).
    const std::int64_t b_num = (params.d.den - 12 * params.d.num) * l;
    const std::int64_t b_den = 2 * params.d.den;
    const int s0 = (int)((b_num + b_den - 1) / b_den);
    auto report_pair = [&](std::uint64_t a_mask, std::uint64_t b_mask) {
        out.reason = "two disjoint sets of size " + std::to_string(s0) +
                     " with no edges between them";
        out.witness_a = mask_to_ids(a_mask);
        out.witness_b = mask_to_ids(b_mask);
    };
    if (s0 <= 0) {
        out.reason = "degenerate parameters: (1/2-6d)*l not positive";
        return out;
    }
    if (l <= 24) {
        // Enumerate size-s0 subsets; a qualifying pair exists iff one exists at
        // the minimum size (shrink both sides).
        std::vector<int> comb((std::size_t)s0);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::uint64_t a_mask = 0, nbrs = 0;
            for (int v : comb) {
                a_mask |= 1ull << v;
                nbrs |= adj[(std::size_t)v];
            }
            const std::uint64_t all = l == 64 ? ~0ull : ((1ull << l) - 1);
            const std::uint64_t t_mask = all & ~a_mask & ~nbrs;
            if (std::popcount(t_mask) >= s0) {
                std::uint64_t b_mask = 0;
                std::uint64_t rest = t_mask;
                for (int k = 0; k < s0; ++k) {
                    b_mask |= rest & (~rest + 1);
                    rest &= rest - 1;
                }
                report_pair(a_mask, b_mask);
                return out;
            }
            // next combination
            int i = s0 - 1;
            while (i >= 0 && comb[(std::size_t)i] == l - s0 + i) --i;
            if (i < 0) break;
            ++comb[(std::size_t)i];
            for (int k = i + 1; k < s0; ++k) comb[(std::size_t)k] = comb[(std::size_t)k - 1] + 1;
        }
    } else {
        // Heuristic: grow a low-degree seed set greedily, keeping the set of
        // vertices with no edge into it as large as possible.
        Rng rng(derive_seed(params.seed, "cut-heuristic", (std::uint64_t)l));
        std::vector<int> ids((std::size_t)l);
        std::iota(ids.begin(), ids.end(), 0);
        const std::uint64_t all = l == 64 ? ~0ull : ((1ull << l) - 1);
        for (int t = 0; t < 200; ++t) {
            rng.shuffle(ids);
            std::uint64_t a_mask = 0, t_mask = all;
            for (int v : ids) {
                if (std::popcount(a_mask) >= s0) break;
                const std::uint64_t bit = 1ull << v;
                if (a_mask & bit) continue;
                const std::uint64_t nt = t_mask & ~bit & ~adj[(std::size_t)v];
                if (std::popcount(nt) < s0) continue;
                a_mask |= bit;
                t_mask = nt;
            }
            if (std::popcount(a_mask) >= s0 && std::popcount(t_mask & ~a_mask) >= s0) {
                std::uint64_t b_mask = 0;
                std::uint64_t rest = t_mask & ~a_mask;
                for (int k = 0; k < s0; ++k) {
                    b_mask |= rest & (~rest + 1);
                    rest &= rest - 1;
                }
                report_pair(a_mask, b_mask);
                return out;
            }
        }
    }

    out.pass = true;
    return out;
}

namespace {

bool ham_exact_dfs(const std::vector<std::uint64_t>& adj, int l, int v, std::uint64_t visited,
                   std::vector<int>& path, std::int64_t& budget) {
    if ((int)path.size() == l)
        return (adj[(std::size_t)v] >> path[0]) & 1;
    if (--budget <= 0) return false;
    std::uint64_t cand = adj[(std::size_t)v] & ~visited;
    while (cand) {
        const int u = std::countr_zero(cand);
        cand &= cand - 1;
        path.push_back(u);
        if (ham_exact_dfs(adj, l, u, visited | (1ull << u), path, budget)) return true;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> hamiltonian_cycle_reduced(const ReducedGraph& rg,
                                                          std::uint64_t seed) {
    const int l = rg.l;
    if (l < 3) return std::nullopt;
    const auto adj = adjacency_masks(rg.r);

    // Rotation-extension with seeded restarts.
    Rng rng(derive_seed(seed, "reduced-ham"));
    const int restarts = 50 * l;
    for (int t = 0; t < restarts; ++t) {
        std::vector<int> path{rng.range(0, l - 1)};
        std::uint64_t on_path = 1ull << path[0];
        std::vector<int> pos((std::size_t)l, -1);
        pos[(std::size_t)path[0]] = 0;
        int steps = 0;
        const int step_budget = 4 * l * l + 64;
        while (steps++ < step_budget) {
            const int tail = path.back();
            std::uint64_t ext = adj[(std::size_t)tail] & ~on_path;
            if (ext) {
                // Extend with a random unused neighbor.
                std::vector<int> opts = mask_to_ids(ext);
                const int u = opts[(std::size_t)rng.below(opts.size())];
                pos[(std::size_t)u] = (int)path.size();
                path.push_back(u);
                on_path |= 1ull << u;
                continue;
            }
            if ((int)path.size() == l && ((adj[(std::size_t)tail] >> path[0]) & 1))
                return path;
            // Rotate: pick a neighbor of the tail inside the path, reverse the
            // suffix after it. When the path spans everything, prefer a
            // rotation whose new tail closes the cycle.
            std::vector<int> nbrs = mask_to_ids(adj[(std::size_t)tail] & on_path);
            std::vector<int> pivots;
            for (int u : nbrs) {
                const int i = pos[(std::size_t)u];
                if (i >= 0 && i + 2 < (int)path.size()) pivots.push_back(i);
            }
            if (pivots.empty()) break;
            int choice = -1;
            if ((int)path.size() == l)
                for (int i : pivots)
                    if ((adj[(std::size_t)path[(std::size_t)i + 1]] >> path[0]) & 1) {
                        choice = i;
                        break;
                    }
            if (choice < 0) choice = pivots[(std::size_t)rng.below(pivots.size())];
            std::reverse(path.begin() + choice + 1, path.end());
            for (int i = choice + 1; i < (int)path.size(); ++i)
                pos[(std::size_t)path[(std::size_t)i]] = i;
        }
    }

    if (l <= 24) {
        std::vector<int> path{0};
        std::int64_t budget = 4'000'000;
        if (ham_exact_dfs(adj, l, 0, 1ull, path, budget)) return path;
    }
    return std::nullopt;
}

} // namespace hamlocate
