#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hamlocate/rng.hpp"
#include "hamlocate/solvers.hpp"

namespace hamlocate {

std::string to_string(ExtremalKind k) {
    switch (k) {
        case ExtremalKind::NonExtremal: return "nonextremal";
        case ExtremalKind::EC1: return "ec1";
        case ExtremalKind::EC2: return "ec2";
    }
    return "unknown";
}

namespace {

struct CutState {
    VertexSet a;            // side A; side B is the complement
    std::vector<int> deg_a; // deg(v, A) for every vertex v
    std::int64_t cut = 0;   // edges with exactly one endpoint in A
};

CutState make_state(const Graph& g, VertexSet a) {
    CutState s;
    const int n = g.n();
    s.deg_a.resize((std::size_t)n);
    for (int v = 0; v < n; ++v) s.deg_a[(std::size_t)v] = g.degree_into(v, a);
    std::int64_t cut = 0;
    for (std::size_t v = a.first(); v < (std::size_t)n; v = a.next(v + 1))
        cut += g.degree((int)v) - s.deg_a[v];
    s.a = std::move(a);
    s.cut = cut;
    return s;
}

// Cut change if u (in A) and w (in B) trade sides.
std::int64_t swap_delta(const Graph& g, const CutState& s, int u, int w) {
    const std::int64_t bu = g.degree(u) - s.deg_a[(std::size_t)u];
    const std::int64_t bw = g.degree(w) - s.deg_a[(std::size_t)w];
    std::int64_t d = (s.deg_a[(std::size_t)u] - bu) + (bw - s.deg_a[(std::size_t)w]);
    if (g.has_edge(u, w)) d += 2;
    return d;
}

void apply_swap(const Graph& g, CutState& s, int u, int w, std::int64_t delta) {
    const int n = g.n();
    s.a.reset((std::size_t)u);
    s.a.set((std::size_t)w);
    const VertexSet& nu = g.neighbors(u);
    for (std::size_t z = nu.first(); z < (std::size_t)n; z = nu.next(z + 1)) s.deg_a[z] -= 1;
    const VertexSet& nw = g.neighbors(w);
    for (std::size_t z = nw.first(); z < (std::size_t)n; z = nw.next(z + 1)) s.deg_a[z] += 1;
    s.cut += delta;
}

// Steepest swap ascent (maximize) / descent (!maximize). Considers the two
// best-gain vertices per side each round so one bad adjacency term cannot
// stall progress.
void climb(const Graph& g, CutState& s, bool maximize) {
    const int n = g.n();
    int guard = 8 * n + 64;
    while (guard-- > 0) {
        int u1 = -1, u2 = -1, w1 = -1, w2 = -1;
        std::int64_t gu1 = 0, gu2 = 0, gw1 = 0, gw2 = 0;
        for (int v = 0; v < n; ++v) {
            const std::int64_t ga = 2 * s.deg_a[(std::size_t)v] - g.degree(v);
            // Moving v out of A contributes +ga; moving v into A contributes -ga.
            if (s.a.test((std::size_t)v)) {
                const std::int64_t gain = maximize ? ga : -ga;
                if (u1 < 0 || gain > gu1) { u2 = u1; gu2 = gu1; u1 = v; gu1 = gain; }
                else if (u2 < 0 || gain > gu2) { u2 = v; gu2 = gain; }
            } else {
                const std::int64_t gain = maximize ? -ga : ga;
                if (w1 < 0 || gain > gw1) { w2 = w1; gw2 = gw1; w1 = v; gw1 = gain; }
                else if (w2 < 0 || gain > gw2) { w2 = v; gw2 = gain; }
            }
        }
        if (u1 < 0 || w1 < 0) break;
        int bu = -1, bw = -1;
        std::int64_t best = 0;
        for (int u : {u1, u2}) {
            if (u < 0) continue;
            for (int w : {w1, w2}) {
                if (w < 0) continue;
                const std::int64_t d = swap_delta(g, s, u, w);
                const std::int64_t score = maximize ? d : -d;
                if (score > best) { best = score; bu = u; bw = w; }
            }
        }
        if (bu < 0) break;
        apply_swap(g, s, bu, bw, swap_delta(g, s, bu, bw));
    }
}

VertexSet random_half(int n, Rng& rng) {
    std::vector<int> ids((std::size_t)n);
    std::iota(ids.begin(), ids.end(), 0);
    rng.shuffle(ids);
    VertexSet a((std::size_t)n);
    for (int i = 0; i < n / 2; ++i) a.set((std::size_t)ids[(std::size_t)i]);
    return a;
}

// Power iteration seed vector. fiedler == true targets the second-smallest
// Laplacian eigenvector (sparse-cut signal); false targets the most negative
// adjacency eigenvector (dense-cut signal). Heuristic only: plain doubles.
VertexSet spectral_half(const Graph& g, bool fiedler, std::uint64_t seed) {
    const int n = g.n();
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    Rng rng(seed);
    std::vector<double> x((std::size_t)n), y((std::size_t)n);
    for (auto& t : x) t = (double)rng.below(100003) / 100003.0 - 0.5;
    for (int iter = 0; iter < 60; ++iter) {
        for (int v = 0; v < n; ++v) {
            double acc = 0.0;
            const VertexSet& nv = g.neighbors(v);
            for (std::size_t u = nv.first(); u < (std::size_t)n; u = nv.next(u + 1))
                acc += x[u];
            y[(std::size_t)v] = fiedler
                ? (2.0 * maxdeg + 1.0 - g.degree(v)) * x[(std::size_t)v] + acc
                : (double)maxdeg * x[(std::size_t)v] - acc;
        }
        double mean = 0.0;
        for (double t : y) mean += t;
        mean /= n;
        double norm = 0.0;
        for (auto& t : y) { t -= mean; norm += t * t; }
        norm = std::sqrt(norm);
        if (norm < 1e-12) {
            for (auto& t : y) t = (double)rng.below(100003) / 100003.0 - 0.5;
        } else {
            for (auto& t : y) t /= norm;
        }
        x.swap(y);
    }
    std::vector<int> ids((std::size_t)n);
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int p, int q) {
        if (x[(std::size_t)p] != x[(std::size_t)q]) return x[(std::size_t)p] < x[(std::size_t)q];
        return p < q;
    });
    VertexSet a((std::size_t)n);
    for (int i = 0; i < n / 2; ++i) a.set((std::size_t)ids[(std::size_t)i]);
    return a;
}

} // namespace

ClassifyResult classify(const Graph& g, const Ratio& alpha, int effort, std::uint64_t seed) {
    const int n = g.n();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("classify: order must be even and at least 4");
    if (effort < 1) throw std::invalid_argument("classify: effort must be positive");
    const int h = n / 2;
    const std::int64_t cells = (std::int64_t)h * h;

    ClassifyResult res;
    if (n <= 16) {
        res.exact = true;
        // Vertex 0 pinned to side A; enumerate the other h-1 members.
        std::vector<int> comb((std::size_t)(h - 1));
        std::iota(comb.begin(), comb.end(), 1);
        std::int64_t best_max = -1, best_min = -1;
        while (true) {
            VertexSet a((std::size_t)n);
            a.set(0);
            for (int v : comb) a.set((std::size_t)v);
            std::int64_t cut = 0;
            for (std::size_t v = a.first(); v < (std::size_t)n; v = a.next(v + 1))
                cut += g.degree((int)v) - g.degree_into((int)v, a);
            if (best_max < 0 || cut > best_max) {
                best_max = cut;
                res.maxcut_a = a;
            }
            if (best_min < 0 || cut < best_min) {
                best_min = cut;
                res.mincut_a = a;
            }
            int i = h - 2;
            while (i >= 0 && comb[(std::size_t)i] == n - 1 - (h - 2 - i)) --i;
            if (i < 0) break;
            ++comb[(std::size_t)i];
            for (std::size_t j = (std::size_t)i + 1; j < comb.size(); ++j)
                comb[j] = comb[j - 1] + 1;
        }
        res.maxcut_edges = best_max;
        res.mincut_edges = best_min;
    } else {
        for (bool maximize : {true, false}) {
            std::int64_t best = -1;
            VertexSet best_a;
            for (int r = 0; r <= effort; ++r) {
                const std::uint64_t sub =
                    derive_seed(seed, maximize ? "classify-max" : "classify-min", (std::uint64_t)r);
                VertexSet start;
                if (r == 0) {
                    start = spectral_half(g, !maximize, sub);
                } else {
                    Rng rng(sub);
                    start = random_half(n, rng);
                }
                CutState s = make_state(g, std::move(start));
                climb(g, s, maximize);
                const bool better = best < 0 || (maximize ? s.cut > best : s.cut < best);
                if (better) {
                    best = s.cut;
                    best_a = s.a;
                }
            }
            if (maximize) {
                res.maxcut_edges = best;
                res.maxcut_a = best_a;
            } else {
                res.mincut_edges = best;
                res.mincut_a = best_a;
            }
        }
    }

    res.maxcut_b = VertexSet((std::size_t)n);
    res.mincut_b = VertexSet((std::size_t)n);
    for (int v = 0; v < n; ++v) {
        if (!res.maxcut_a.test((std::size_t)v)) res.maxcut_b.set((std::size_t)v);
        if (!res.mincut_a.test((std::size_t)v)) res.mincut_b.set((std::size_t)v);
    }

    // maxcut/cells >= 1 - alpha, exactly.
    if (frac_ge(res.maxcut_edges, cells, alpha.den - alpha.num, alpha.den)) {
        res.verdict = ExtremalKind::EC1;
        res.part_a = res.maxcut_a;
        res.part_b = res.maxcut_b;
    } else if (!frac_gt(res.mincut_edges, cells, alpha.num, alpha.den)) {
        // mincut/cells <= alpha, exactly.
        res.verdict = ExtremalKind::EC2;
        res.part_a = res.mincut_a;
        res.part_b = res.mincut_b;
    } else {
        res.verdict = ExtremalKind::NonExtremal;
    }
    return res;
}

} // namespace hamlocate
