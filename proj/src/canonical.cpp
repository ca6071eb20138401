#include "hamlocate/canonical.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamlocate/io.hpp"

namespace hamlocate {

namespace {

// Minimal-bitstring search. Position p >= 1 contributes "column" p: the bits
// G(ord[i], v) for i < p, row 0 most significant. Candidates are tried in
// ascending column value so the greedy first descent is already strong;
// prefixes that exceed the best string are cut, and ties are cut when the
// best string's remaining suffix is all zeros (no strict improvement left).
class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : n_(g.n()) {
        adj_.resize((std::size_t)n_);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t m = 0;
            const auto& row = g.neighbors(v);
            for (std::size_t u = row.first(); u < (std::size_t)n_; u = row.next(u + 1))
                m |= 1ull << u;
            adj_[(std::size_t)v] = m;
        }
        ord_.assign((std::size_t)n_, -1);
        cols_.assign((std::size_t)n_, 0);
        tight_.assign((std::size_t)n_ + 1, 1);
    }

    std::vector<int> run() {
        if (n_ == 0) return {};
        dfs(0);
        return best_ord_;
    }

private:
    void record_best() {
        best_ = cols_;
        best_ord_ = ord_;
        have_best_ = true;
        suffix_one_.assign((std::size_t)n_ + 1, 0);
        for (int p = n_ - 1; p >= 0; --p)
            suffix_one_[(std::size_t)p] =
                (char)(suffix_one_[(std::size_t)p + 1] || best_[(std::size_t)p] != 0);
        std::fill(tight_.begin(), tight_.end(), (char)1);
    }

    void dfs(int p) {
        if (p == n_) {
            if (!have_best_ || !tight_[(std::size_t)p]) record_best();
            return;
        }
        // Column value of each unused candidate at position p.
        struct Cand { std::uint64_t col; int v; };
        std::vector<Cand> cands;
        cands.reserve((std::size_t)(n_ - p));
        for (int v = 0; v < n_; ++v) {
            if (used_ >> v & 1) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < p; ++i)
                col = (col << 1) | ((adj_[(std::size_t)v] >> ord_[(std::size_t)i]) & 1);
            cands.push_back({col, v});
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });
        for (const Cand& c : cands) {
            bool t = tight_[(std::size_t)p] != 0;
            bool child_tight;
            if (have_best_ && t) {
                if (c.col > best_[(std::size_t)p]) break; // sorted: rest are worse
                if (c.col == best_[(std::size_t)p]) {
                    if (!suffix_one_[(std::size_t)p + 1]) continue; // cannot improve
                    child_tight = true;
                } else {
                    child_tight = false; // strictly smaller prefix
                }
            } else {
                child_tight = false;
            }
            ord_[(std::size_t)p] = c.v;
            cols_[(std::size_t)p] = c.col;
            used_ |= 1ull << c.v;
            tight_[(std::size_t)p + 1] = (char)child_tight;
            dfs(p + 1);
            used_ &= ~(1ull << c.v);
        }
        ord_[(std::size_t)p] = -1;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t used_ = 0;
    std::vector<int> ord_, best_ord_;
    std::vector<std::uint64_t> cols_, best_;
    std::vector<char> tight_, suffix_one_;
    bool have_best_ = false;
};

} // namespace

Graph relabel(const Graph& g, const std::vector<int>& order) {
    if ((int)order.size() != g.n()) throw std::invalid_argument("relabel: order size mismatch");
    GraphBuilder b(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.has_edge(order[(std::size_t)i], order[(std::size_t)j])) b.add_edge(i, j);
    return b.build();
}

std::vector<int> canonical_order(const Graph& g) {
    if (g.n() > 64) throw std::invalid_argument("canonical_order: n > 64 unsupported");
    return CanonSearch(g).run();
}

std::string canonical_g6(const Graph& g) {
    return to_graph6(relabel(g, canonical_order(g)));
}

Graph complement_graph(const Graph& g) {
    GraphBuilder b(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.build();
}

} // namespace hamlocate
