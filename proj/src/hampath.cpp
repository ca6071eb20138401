#include <stdexcept>
#include <vector>

#include "hamlocate/rng.hpp"
#include "hamlocate/solvers.hpp"

namespace hamlocate {

namespace {

// Reverse path[i..end], keeping pos[] consistent.
void reverse_suffix(std::vector<int>& path, std::vector<int>& pos, std::size_t i) {
    std::size_t j = path.size() - 1;
    while (i < j) {
        std::swap(path[i], path[j]);
        pos[(std::size_t)path[i]] = (int)i;
        pos[(std::size_t)path[j]] = (int)j;
        ++i;
        --j;
    }
    if (i == j) pos[(std::size_t)path[i]] = (int)i;
}

} // namespace

std::optional<std::vector<int>> hamiltonian_path_dense(const Graph& g, const VertexSet& sub,
                                                       int u, int v, std::uint64_t seed,
                                                       int restarts) {
    const int n = g.n();
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
        throw std::invalid_argument("hamiltonian_path_dense: endpoints invalid");
    if (!sub.test((std::size_t)u) || !sub.test((std::size_t)v))
        throw std::invalid_argument("hamiltonian_path_dense: endpoints outside the ground set");
    if (restarts < 1) throw std::invalid_argument("hamiltonian_path_dense: restarts must be positive");
    const int total = (int)sub.count();

    for (int attempt = 0; attempt < restarts; ++attempt) {
        Rng rng(derive_seed(seed, "hampath", (std::uint64_t)attempt));
        VertexSet avail = sub;
        avail.reset((std::size_t)u);
        avail.reset((std::size_t)v);
        std::vector<int> path;
        path.reserve((std::size_t)total);
        path.push_back(u);
        VertexSet on_path((std::size_t)n);
        on_path.set((std::size_t)u);
        std::vector<int> pos((std::size_t)n, -1);
        pos[(std::size_t)u] = 0;

        long budget = 16L * total + 400;
        while ((int)path.size() < total - 1 && budget-- > 0) {
            const int end = path.back();
            VertexSet cset = g.neighbors(end);
            cset &= avail;
            const std::vector<int> cands = cset.to_vector();
            if (!cands.empty()) {
                int chosen;
                if (rng.chance(1, 4)) {
                    chosen = cands[(std::size_t)rng.below(cands.size())];
                } else {
                    int best = -1;
                    std::vector<int> ties;
                    for (int c : cands) {
                        const int score = g.degree_into(c, avail);
                        if (score > best) {
                            best = score;
                            ties.clear();
                            ties.push_back(c);
                        } else if (score == best) {
                            ties.push_back(c);
                        }
                    }
                    chosen = ties[(std::size_t)rng.below(ties.size())];
                }
                path.push_back(chosen);
                pos[(std::size_t)chosen] = (int)path.size() - 1;
                on_path.set((std::size_t)chosen);
                avail.reset((std::size_t)chosen);
            } else {
                VertexSet pset = g.neighbors(end);
                pset &= on_path;
                std::vector<int> pivots;
                for (std::size_t p = pset.first(); p < (std::size_t)n; p = pset.next(p + 1))
                    if (pos[p] >= 0 && pos[p] <= (int)path.size() - 3) pivots.push_back((int)p);
                if (pivots.empty()) break;
                const int p = pivots[(std::size_t)rng.below(pivots.size())];
                reverse_suffix(path, pos, (std::size_t)pos[(std::size_t)p] + 1);
            }
        }
        if ((int)path.size() != total - 1) continue;

        // Rotate until the free end reaches a neighbor of v.
        bool closed = g.has_edge(path.back(), v);
        long tries = 4L * total + 16;
        while (!closed && tries-- > 0) {
            const int end = path.back();
            VertexSet pset = g.neighbors(end);
            pset &= on_path;
            std::vector<int> pivots;
            int direct = -1;
            for (std::size_t p = pset.first(); p < (std::size_t)n; p = pset.next(p + 1)) {
                if (pos[p] < 0 || pos[p] > (int)path.size() - 3) continue;
                pivots.push_back((int)p);
                // Reversing after p makes path[pos[p]+1] the new free end.
                if (direct < 0 && g.has_edge(path[(std::size_t)pos[p] + 1], v)) direct = (int)p;
            }
            if (pivots.empty()) break;
            const int p = direct >= 0 ? direct : pivots[(std::size_t)rng.below(pivots.size())];
            reverse_suffix(path, pos, (std::size_t)pos[(std::size_t)p] + 1);
            closed = g.has_edge(path.back(), v);
        }
        if (!closed) continue;
        path.push_back(v);

        // Internal re-verification; a violation here is a bug, not an input error.
        if ((int)path.size() != total) throw std::logic_error("hamiltonian_path_dense: bad length");
        VertexSet seen((std::size_t)n);
        for (std::size_t i = 0; i < path.size(); ++i) {
            const int w = path[i];
            if (!sub.test((std::size_t)w) || seen.test((std::size_t)w))
                throw std::logic_error("hamiltonian_path_dense: bad vertex set");
            seen.set((std::size_t)w);
            if (i > 0 && !g.has_edge(path[i - 1], w))
                throw std::logic_error("hamiltonian_path_dense: missing edge");
        }
        return path;
    }
    return std::nullopt;
}

} // namespace hamlocate
