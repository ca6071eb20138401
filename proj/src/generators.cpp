#include "hamlocate/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamlocate/rng.hpp"

namespace hamlocate {

namespace {

// Deterministic Bernoulli(p) from one engine draw; p quantized to 1e-9.
bool bern(Rng& rng, double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    std::uint64_t num = (std::uint64_t)(p * 1e9 + 0.5);
    return rng.chance(num, 1000000000ull);
}

void assert_min_degree(const Graph& g, int bound, const char* who) {
    if (g.min_degree() < bound)
        throw std::logic_error(std::string(who) + ": generated graph misses degree bound");
}

} // namespace

Graph gen_sharpness_bipartite(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("gen_sharpness_bipartite: n must be even");
    return complete_bipartite(n / 2, n / 2);
}

Graph gen_sharpness_split(int n) {
    if (n < 5 || n % 2 != 1) throw std::invalid_argument("gen_sharpness_split: n must be odd");
    int k = (n - 3) / 2;
    GraphBuilder b(n);
    // copies A = [0,k), B = [k,2k); triangle T = [2k, 2k+3)
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
    for (int u = k; u < 2 * k; ++u)
        for (int v = u + 1; v < 2 * k; ++v) b.add_edge(u, v);
    for (int u = 2 * k; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    for (int t = 2 * k; t < n; ++t)
        for (int v = 0; v < 2 * k; ++v) b.add_edge(t, v);
    Graph g = b.build();
    assert_min_degree(g, (n + 1) / 2, "gen_sharpness_split");
    return g;
}

Graph gen_random_dirac(int n, int surplus, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("gen_random_dirac: n too small");
    int target = dirac_plus_one(n) + surplus;
    if (target > n - 1) throw std::invalid_argument("gen_random_dirac: surplus infeasible");
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(1, 2)) b.add_edge(u, v);
    // Repair upward: repeatedly give a deficient vertex a new neighbor, choosing
    // the lowest-degree non-neighbor (ties by id) so the repair stays spread out.
    Graph g = b.build();
    std::vector<int> deg((std::size_t)n);
    for (int v = 0; v < n; ++v) deg[(std::size_t)v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            while (deg[(std::size_t)v] < target) {
                int best = -1;
                for (int u = 0; u < n; ++u) {
                    if (u == v || b.has_edge(u, v)) continue;
                    if (best < 0 || deg[(std::size_t)u] < deg[(std::size_t)best]) best = u;
                }
                if (best < 0) throw std::logic_error("gen_random_dirac: no repair candidate");
                b.add_edge(v, best);
                ++deg[(std::size_t)v];
                ++deg[(std::size_t)best];
                changed = true;
            }
        }
    }
    g = b.build();
    assert_min_degree(g, target, "gen_random_dirac");
    return g;
}

Graph gen_ec1(int n, double noise, std::uint64_t seed) {
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("gen_ec1: n must be even, >= 6");
    int h = n / 2;
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < h; ++u)
        for (int v = h; v < n; ++v) b.add_edge(u, v);
    // Intra-side floor: a matching per side; when h is odd one vertex is left
    // over, covered by a path on the last three vertices.
    auto add_floor = [&](int base) {
        int i = 0;
        for (; i + 1 < h; i += 2) b.add_edge(base + i, base + i + 1);
        if (h % 2 == 1) b.add_edge(base + h - 1, base + h - 2);
    };
    add_floor(0);
    add_floor(h);
    for (int base : {0, h})
        for (int u = base; u < base + h; ++u)
            for (int v = u + 1; v < base + h; ++v)
                if (!b.has_edge(u, v) && bern(rng, noise)) b.add_edge(u, v);
    Graph g = b.build();
    assert_min_degree(g, n / 2 + 1, "gen_ec1");
    return g;
}

Graph gen_ec2(int n, double cut_density, std::uint64_t seed) {
    if (n < 8 || n % 2 != 0) throw std::invalid_argument("gen_ec2: n must be even, >= 8");
    int h = n / 2;
    Rng rng(seed);
    GraphBuilder b(n);
    for (int base : {0, h})
        for (int u = base; u < base + h; ++u)
            for (int v = u + 1; v < base + h; ++v) b.add_edge(u, v);
    std::vector<int> cross((std::size_t)n, 0);
    for (int u = 0; u < h; ++u)
        for (int v = h; v < n; ++v)
            if (bern(rng, cut_density)) {
                b.add_edge(u, v);
                ++cross[(std::size_t)u];
                ++cross[(std::size_t)v];
            }
    // Each vertex needs >= 2 cross neighbors to reach degree n/2+1.
    for (int v = 0; v < n; ++v) {
        while (cross[(std::size_t)v] < 2) {
            int base = v < h ? h : 0;
            int best = -1;
            for (int u = base; u < base + h; ++u) {
                if (b.has_edge(u, v)) continue;
                if (best < 0 || cross[(std::size_t)u] < cross[(std::size_t)best]) best = u;
            }
            if (best < 0) throw std::logic_error("gen_ec2: no repair candidate");
            b.add_edge(v, best);
            ++cross[(std::size_t)v];
            ++cross[(std::size_t)best];
        }
    }
    Graph g = b.build();
    assert_min_degree(g, n / 2 + 1, "gen_ec2");
    return g;
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (bern(rng, p)) b.add_edge(u, v);
    return b.build();
}

Graph gen_bipartite_gnp(int a, int b_, double p, std::uint64_t seed) {
    Rng rng(seed);
    GraphBuilder b(a + b_);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b_; ++v)
            if (bern(rng, p)) b.add_edge(u, v);
    return b.build();
}

} // namespace hamlocate
