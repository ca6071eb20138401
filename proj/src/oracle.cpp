#include "hamlocate/oracle.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>
#include <vector>

namespace hamlocate {

namespace {

using Clock = std::chrono::steady_clock;

// Fast path: adjacency as single 64-bit masks (n <= 64). The generic VertexSet
// variant below mirrors it for larger orders.
class Search64 {
public:
    Search64(const Graph& g, int x, int y, int d, const SearchBudget& budget)
        : g_(g), n_(g.n()), x_(x), y_(y), d_(d), budget_(budget) {
        adj_.resize((std::size_t)n_);
        for (int v = 0; v < n_; ++v) {
            std::uint64_t m = 0;
            const auto& row = g.neighbors(v);
            for (std::size_t u = row.first(); u < (std::size_t)n_; u = row.next(u + 1))
                m |= 1ull << u;
            adj_[(std::size_t)v] = m;
        }
        all_ = n_ == 64 ? ~0ull : ((1ull << n_) - 1);
        start_ = Clock::now();
    }

    SearchResult run() {
        SearchResult res;
        path_.assign((std::size_t)n_, -1);
        path_[0] = x_;
        visited_ = 1ull << x_;
        bool found = extend(1, x_);
        res.nodes = nodes_;
        res.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        if (found) {
            CycleCertificate c;
            c.order = path_;
            c.x = x_;
            c.y = y_;
            c.claimed_distance = d_;
            res.certificate = std::move(c);
            res.status = SearchStatus::Found;
        } else {
            res.status = overrun_ ? SearchStatus::Exhausted : SearchStatus::Absent;
        }
        return res;
    }

private:
    bool budget_ok() {
        if (budget_.node_limit && nodes_ > *budget_.node_limit) return false;
        if (budget_.time_limit_ms && (nodes_ & 4095) == 0) {
            double ms =
                std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
            if (ms > *budget_.time_limit_ms) return false;
        }
        return true;
    }

    // Every unvisited vertex still needs two cycle neighbors drawn from the
    // unvisited set, the current tail, or x; the tail needs a way forward.
    bool feasible(int tail) {
        std::uint64_t rem = all_ & ~visited_;
        std::uint64_t tail_adj = adj_[(std::size_t)tail];
        std::uint64_t x_adj = adj_[(std::size_t)x_];
        for (std::uint64_t r = rem; r;) {
            int u = std::countr_zero(r);
            r &= r - 1;
            int have = std::popcount(adj_[(std::size_t)u] & rem);
            if (tail_adj >> u & 1) ++have;
            if (x_adj >> u & 1) ++have;
            if (have < 2) return false;
        }
        if (budget_.connectivity_pruning) {
            // All unvisited vertices must be reachable from the tail through
            // unvisited vertices only.
            std::uint64_t reach = tail_adj & rem;
            if (!reach && rem) return false;
            std::uint64_t frontier = reach;
            while (frontier) {
                std::uint64_t next = 0;
                for (std::uint64_t f = frontier; f;) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj_[(std::size_t)u] & rem & ~reach;
                }
                reach |= next;
                frontier = next;
            }
            if (reach != rem) return false;
        }
        return true;
    }

    bool extend(int pos, int tail) {
        if (pos == n_) return (adj_[(std::size_t)tail] >> x_) & 1;
        std::uint64_t cands = adj_[(std::size_t)tail] & ~visited_;
        bool y_placed = (visited_ >> y_) & 1;
        if (!y_placed) {
            bool allowed_here = pos == d_ || pos == n_ - d_;
            if (pos == n_ - d_) {
                cands &= 1ull << y_; // last chance: force y
            } else if (!allowed_here) {
                cands &= ~(1ull << y_);
            }
        }
        while (cands) {
            int v = std::countr_zero(cands);
            cands &= cands - 1;
            ++nodes_;
            if (!budget_ok()) {
                overrun_ = true;
                return false;
            }
            path_[(std::size_t)pos] = v;
            visited_ |= 1ull << v;
            if (pos == n_ - 1 || feasible(v)) {
                if (extend(pos + 1, v)) return true;
                if (overrun_) {
                    visited_ &= ~(1ull << v);
                    return false;
                }
            }
            visited_ &= ~(1ull << v);
        }
        path_[(std::size_t)pos] = -1;
        return false;
    }

    const Graph& g_;
    int n_, x_, y_, d_;
    SearchBudget budget_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t all_ = 0, visited_ = 0;
    std::vector<int> path_;
    std::int64_t nodes_ = 0;
    bool overrun_ = false;
    Clock::time_point start_;
};

// Generic variant for n > 64. Same algorithm over VertexSet.
class SearchWide {
public:
    SearchWide(const Graph& g, int x, int y, int d, const SearchBudget& budget)
        : g_(g), n_(g.n()), x_(x), y_(y), d_(d), budget_(budget),
          visited_((std::size_t)g.n()) {
        start_ = Clock::now();
    }

    SearchResult run() {
        SearchResult res;
        path_.assign((std::size_t)n_, -1);
        path_[0] = x_;
        visited_.set((std::size_t)x_);
        bool found = extend(1, x_);
        res.nodes = nodes_;
        res.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        if (found) {
            CycleCertificate c;
            c.order = path_;
            c.x = x_;
            c.y = y_;
            c.claimed_distance = d_;
            res.certificate = std::move(c);
            res.status = SearchStatus::Found;
        } else {
            res.status = overrun_ ? SearchStatus::Exhausted : SearchStatus::Absent;
        }
        return res;
    }

private:
    bool budget_ok() {
        if (budget_.node_limit && nodes_ > *budget_.node_limit) return false;
        if (budget_.time_limit_ms && (nodes_ & 1023) == 0) {
            double ms =
                std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
            if (ms > *budget_.time_limit_ms) return false;
        }
        return true;
    }

    bool feasible(int tail) {
        VertexSet rem = VertexSet::full((std::size_t)n_);
        rem.subtract(visited_);
        const VertexSet& tail_adj = g_.neighbors(tail);
        const VertexSet& x_adj = g_.neighbors(x_);
        for (std::size_t u = rem.first(); u < (std::size_t)n_; u = rem.next(u + 1)) {
            int have = (int)g_.neighbors((int)u).and_count(rem);
            if (tail_adj.test(u)) ++have;
            if (x_adj.test(u)) ++have;
            if (have < 2) return false;
        }
        if (budget_.connectivity_pruning && !rem.empty()) {
            VertexSet reach = tail_adj;
            reach &= rem;
            if (reach.empty()) return false;
            VertexSet frontier = reach;
            while (!frontier.empty()) {
                VertexSet next((std::size_t)n_);
                for (std::size_t u = frontier.first(); u < (std::size_t)n_;
                     u = frontier.next(u + 1)) {
                    VertexSet nb = g_.neighbors((int)u);
                    nb &= rem;
                    nb.subtract(reach);
                    next |= nb;
                }
                reach |= next;
                frontier = next;
            }
            if (!(reach == rem)) return false;
        }
        return true;
    }

    bool extend(int pos, int tail) {
        if (pos == n_) return g_.has_edge(tail, x_);
        VertexSet cands = g_.neighbors(tail);
        cands.subtract(visited_);
        bool y_placed = visited_.test((std::size_t)y_);
        if (!y_placed) {
            if (pos == n_ - d_) {
                VertexSet only((std::size_t)n_);
                only.set((std::size_t)y_);
                cands &= only;
            } else if (pos != d_) {
                cands.reset((std::size_t)y_);
            }
        }
        for (std::size_t v = cands.first(); v < (std::size_t)n_; v = cands.next(v + 1)) {
            ++nodes_;
            if (!budget_ok()) {
                overrun_ = true;
                return false;
            }
            path_[(std::size_t)pos] = (int)v;
            visited_.set(v);
            if (pos == n_ - 1 || feasible((int)v)) {
                if (extend(pos + 1, (int)v)) return true;
                if (overrun_) {
                    visited_.reset(v);
                    return false;
                }
            }
            visited_.reset(v);
        }
        path_[(std::size_t)pos] = -1;
        return false;
    }

    const Graph& g_;
    int n_, x_, y_, d_;
    SearchBudget budget_;
    VertexSet visited_;
    std::vector<int> path_;
    std::int64_t nodes_ = 0;
    bool overrun_ = false;
    Clock::time_point start_;
};

} // namespace

SearchResult find_cycle_with_distance(const Graph& g, int x, int y, int d,
                                      const SearchBudget& budget) {
    int n = g.n();
    if (x < 0 || x >= n || y < 0 || y >= n) throw std::invalid_argument("oracle: vertex out of range");
    if (x == y) throw std::invalid_argument("oracle: x == y");
    if (d < 1 || d > n / 2) throw std::invalid_argument("oracle: d out of range");
    if (n < 3) return {SearchStatus::Absent, std::nullopt, 0, 0.0};
    SearchResult res = n <= 64 ? Search64(g, x, y, d, budget).run()
                               : SearchWide(g, x, y, d, budget).run();
    return res;
}

} // namespace hamlocate
