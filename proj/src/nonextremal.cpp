#include "hamlocate/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hamlocate/embedder.hpp"
#include "hamlocate/rng.hpp"

namespace hamlocate {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void push_stage(std::vector<StageNote>& log, std::string stage, Clock::time_point t0,
                std::string note) {
    log.push_back(StageNote{std::move(stage), elapsed_ms(t0), std::move(note)});
}

SolveOutcome failure(std::vector<StageNote> stages, std::string stage, std::string detail) {
    SolveOutcome out;
    out.ok = false;
    out.stage = std::move(stage);
    out.detail = std::move(detail);
    out.stages = std::move(stages);
    return out;
}

void append(std::vector<int>& out, const std::vector<int>& p, std::size_t from = 0) {
    out.insert(out.end(), p.begin() + (std::ptrdiff_t)from, p.end());
}

// argmax of deg(v, target) over pool minus taken; lowest id wins ties.
int best_into(const Graph& g, const VertexSet& pool, const VertexSet& target,
              const VertexSet& taken) {
    const std::size_t n = pool.capacity();
    int best = -1;
    long long bestd = -1;
    for (std::size_t v = pool.first(); v < n; v = pool.next(v + 1)) {
        if (taken.test(v)) continue;
        const long long d = g.degree_into((int)v, target);
        if (d > bestd) {
            bestd = d;
            best = (int)v;
        }
    }
    return best;
}

// argmax of deg(w, target) over N(from) intersect pool minus taken.
int best_nbr_into(const Graph& g, int from, const VertexSet& pool, const VertexSet& target,
                  const VertexSet& taken) {
    VertexSet cand = g.neighbors(from);
    cand &= pool;
    const std::size_t n = pool.capacity();
    int best = -1;
    long long bestd = -1;
    for (std::size_t v = cand.first(); v < n; v = cand.next(v + 1)) {
        if (taken.test(v)) continue;
        const long long d = g.degree_into((int)v, target);
        if (d > bestd) {
            bestd = d;
            best = (int)v;
        }
    }
    return best;
}

// One partner pair along the cluster cycle, its two embedded paths, and the
// splice bookkeeping.
struct PairState {
    int xc = -1, yc = -1; // cluster ids
    VertexSet xs, ys;     // working sides after removals
    int N = 0;
    int l1 = 0;                       // first-path vertex count (l2 = 2N - l1)
    int ex1 = -1, ey1 = -1;           // first path endpoints
    int ex2 = -1, ey2 = -1;           // second path endpoints
    std::vector<int> p1, p2;          // embedded paths
    int splices = 0;
};

struct Placement {
    std::vector<PairState> pairs; // pairs[0] is pair 1
    std::vector<int> leftovers;   // vertices to splice back (never x or y)
    int r = 0, dir = 1, t = 2;
};

} // namespace

SolveOutcome solve_nonextremal(const Graph& g, int x, int y, const Params& params,
                               std::uint64_t seed) {
    const int n = g.n();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("non-extremal solver requires even order >= 4");
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw std::invalid_argument("invalid terminal pair");

    const auto t0 = Clock::now();
    std::vector<StageNote> stages;
    const int h = n / 2;

    // Complete graphs admit a direct answer; the partition machinery is
    // pointless (and unreliable at toy sizes) there.
    if (2 * (std::int64_t)g.m() == (std::int64_t)n * (n - 1)) {
        std::vector<int> order;
        order.reserve((std::size_t)n);
        order.push_back(x);
        std::vector<int> others;
        others.reserve((std::size_t)n - 2);
        for (int v = 0; v < n; ++v)
            if (v != x && v != y) others.push_back(v);
        for (int i = 0; i < h - 1; ++i) order.push_back(others[(std::size_t)i]);
        order.push_back(y);
        for (int i = h - 1; i < (int)others.size(); ++i) order.push_back(others[(std::size_t)i]);
        CycleCertificate cert;
        cert.order = std::move(order);
        cert.x = x;
        cert.y = y;
        cert.claimed_distance = h;
        const Verdict v = verify_certificate(g, cert, h);
        push_stage(stages, "shortcut", t0, "complete graph");
        if (!v.ok) return failure(std::move(stages), "verify", v.reason);
        SolveOutcome out;
        out.ok = true;
        out.cert = std::move(cert);
        out.stages = std::move(stages);
        return out;
    }

    // ----------------------------------------------------------------- B --
    Params pp = params;
    pp.seed = derive_seed(seed, "partition", 0);
    PartitionResult pr = build_partition(g, pp);
    if (!pr.partition) {
        push_stage(stages, "partition", t0, pr.error);
        return failure(std::move(stages), "partition", pr.error);
    }
    const RegularityPartition& part = *pr.partition;
    const int l = part.l;
    const int L = part.L;
    const int k = l / 2;
    push_stage(stages, "partition", t0,
               "l=" + std::to_string(l) + " L=" + std::to_string(L) +
                   " V0=" + std::to_string(part.V0.count()));

    // ----------------------------------------------------------------- C --
    const ReducedGraph rg = reduced_graph(part);
    const NonextremalCheck ck = check_nonextremal_reduced(rg, params);
    if (!ck.pass) {
        push_stage(stages, "reduced", t0, ck.reason);
        return failure(std::move(stages), "reduced", ck.reason);
    }
    const auto cr = hamiltonian_cycle_reduced(rg, derive_seed(seed, "reduced-cycle", 0));
    if (!cr) {
        push_stage(stages, "reduced", t0, "no spanning cycle of the cluster graph");
        return failure(std::move(stages), "reduced", "no spanning cycle of the cluster graph");
    }
    push_stage(stages, "reduced", t0, "cluster cycle found");

    // ----------------------------------------------------------------- D --
    const int e1 = (n % 4 == 0) ? 1 : 0;
    const int s_target = h - 1 - e1; // always even

    VertexSet gone = part.V0;
    gone.set((std::size_t)x);
    gone.set((std::size_t)y);
    std::vector<int> base_leftovers;
    for (std::size_t v = part.V0.first(); v < (std::size_t)n; v = part.V0.next(v + 1))
        if ((int)v != x && (int)v != y) base_leftovers.push_back((int)v);

    std::vector<VertexSet> base_side((std::size_t)l, VertexSet((std::size_t)n));
    for (int c = 0; c < l; ++c) {
        base_side[(std::size_t)c] = part.clusters[(std::size_t)c];
        base_side[(std::size_t)c].subtract(gone);
    }

    const std::int64_t dnum = params.d.num;
    const std::int64_t dden = params.d.den;
    std::optional<Placement> chosen;
    std::string plan_fail = "no cluster-cycle placement satisfied the plan constraints";

    for (int r = 0; r < l && !chosen; ++r) {
        for (int dir = 0; dir < 2 && !chosen; ++dir) {
            // Relabel the cluster cycle: Y1, X2, Y2, ..., Xk, Yk, X1.
            std::vector<int> S((std::size_t)l);
            for (int j = 0; j < l; ++j) {
                const int step = (dir == 0) ? j : -j;
                const int pos = ((r + step) % l + l) % l;
                S[(std::size_t)j] = (*cr)[(std::size_t)pos];
            }
            std::vector<PairState> pairs((std::size_t)k);
            pairs[0].xc = S[(std::size_t)(2 * k - 1)];
            pairs[0].yc = S[0];
            for (int i = 2; i <= k; ++i) {
                pairs[(std::size_t)(i - 1)].xc = S[(std::size_t)(2 * i - 3)];
                pairs[(std::size_t)(i - 1)].yc = S[(std::size_t)(2 * i - 2)];
            }
            std::vector<int> leftovers = base_leftovers;
            for (auto& P : pairs) {
                P.xs = base_side[(std::size_t)P.xc];
                P.ys = base_side[(std::size_t)P.yc];
            }

            // Trim: drop vertices too poor toward their partner side, until
            // stable; then rebalance each pair to equal sides.
            bool changed = true;
            while (changed) {
                changed = false;
                for (auto& P : pairs) {
                    for (int side = 0; side < 2; ++side) {
                        VertexSet& own = side == 0 ? P.xs : P.ys;
                        const VertexSet& partner = side == 0 ? P.ys : P.xs;
                        const std::int64_t psz = (std::int64_t)partner.count();
                        std::vector<int> drop;
                        for (std::size_t v = own.first(); v < (std::size_t)n;
                             v = own.next(v + 1)) {
                            const std::int64_t d = g.degree_into((int)v, partner);
                            if (d * 2 * dden <= dnum * psz) drop.push_back((int)v);
                        }
                        for (int v : drop) {
                            own.reset((std::size_t)v);
                            leftovers.push_back(v);
                            changed = true;
                        }
                    }
                }
            }
            for (auto& P : pairs) {
                while (P.xs.count() > P.ys.count()) {
                    int worst = -1;
                    long long worstd = -1;
                    for (std::size_t v = P.xs.first(); v < (std::size_t)n; v = P.xs.next(v + 1)) {
                        const long long d = g.degree_into((int)v, P.ys);
                        if (worst < 0 || d < worstd) {
                            worstd = d;
                            worst = (int)v;
                        }
                    }
                    P.xs.reset((std::size_t)worst);
                    leftovers.push_back(worst);
                }
                while (P.ys.count() > P.xs.count()) {
                    int worst = -1;
                    long long worstd = -1;
                    for (std::size_t v = P.ys.first(); v < (std::size_t)n; v = P.ys.next(v + 1)) {
                        const long long d = g.degree_into((int)v, P.xs);
                        if (worst < 0 || d < worstd) {
                            worstd = d;
                            worst = (int)v;
                        }
                    }
                    P.ys.reset((std::size_t)worst);
                    leftovers.push_back(worst);
                }
                P.N = (int)P.xs.count();
            }

            // Donor couple: the first cycle arc needs e1 spliced vertices. If
            // nothing is left over, borrow one vertex from each side of the
            // largest pair.
            if ((int)leftovers.size() < e1) {
                int big = 0;
                for (int i = 1; i < k; ++i)
                    if (pairs[(std::size_t)i].N > pairs[(std::size_t)big].N) big = i;
                PairState& P = pairs[(std::size_t)big];
                for (int side = 0; side < 2; ++side) {
                    VertexSet& own = side == 0 ? P.xs : P.ys;
                    const VertexSet& partner = side == 0 ? P.ys : P.xs;
                    int worst = -1;
                    long long worstd = -1;
                    for (std::size_t v = own.first(); v < (std::size_t)n; v = own.next(v + 1)) {
                        const long long d = g.degree_into((int)v, partner);
                        if (worst < 0 || d < worstd) {
                            worstd = d;
                            worst = (int)v;
                        }
                    }
                    own.reset((std::size_t)worst);
                    leftovers.push_back(worst);
                }
                P.N -= 1;
            }

            // Pair-size floor (1 - d/2) * L, exactly, plus room for the
            // endpoint and length bookkeeping.
            bool sides_ok = true;
            for (auto& P : pairs) {
                if ((std::int64_t)P.N * 2 * dden < (2 * dden - dnum) * (std::int64_t)L ||
                    P.N < 6) {
                    plan_fail = "a cluster pair lost too many vertices (kept " +
                                std::to_string(P.N) + " of " + std::to_string(L) + ")";
                    sides_ok = false;
                    break;
                }
            }
            if (!sides_ok) continue;

            std::int64_t total = 0;
            for (auto& P : pairs) total += 2 * (std::int64_t)P.N;
            if (total + (std::int64_t)leftovers.size() + 2 != n) {
                plan_fail = "vertex accounting failed during planning";
                continue;
            }

            // Choose the terminal arc span t.
            for (int t = 2; t <= k && !chosen; ++t) {
                const int lo = 4 * (t - 1);
                std::int64_t hi = 0;
                for (int i = 2; i <= t; ++i) hi += 2 * (std::int64_t)pairs[(std::size_t)(i - 1)].N - 4;
                if (s_target < lo || s_target > hi) continue;
                // Capacity invariant for wide terminal arcs.
                if ((std::int64_t)(t - 1) * 2 * dden >= (dden - 3 * dnum) * (std::int64_t)l) {
                    if (4 * (t - 1) > h - 2) continue;
                    if ((std::int64_t)(h - 2) * 2 * dden >
                        2 * (std::int64_t)(t - 1) *
                            ((2 * dden - dnum) * (std::int64_t)L - 4 * dden))
                        continue;
                }
                // Terminal anchors: each terminal needs spare room into the
                // clusters its connector edges use.
                if (g.degree_into(x, pairs[1].xs) < 3) continue;
                if (g.degree_into(x, pairs[0].ys) < 3) continue;
                if (g.degree_into(y, pairs[(std::size_t)(t - 1)].ys) < 3) continue;
                if (g.degree_into(y, pairs[(std::size_t)(t % k)].xs) < 3) continue;

                Placement pl;
                pl.pairs = pairs;
                pl.leftovers = leftovers;
                pl.r = r;
                pl.dir = (dir == 0) ? 1 : -1;
                pl.t = t;
                chosen = std::move(pl);
            }
        }
    }
    if (!chosen) {
        push_stage(stages, "plan", t0, plan_fail);
        return failure(std::move(stages), "plan", plan_fail);
    }
    Placement& pl = *chosen;
    const int t = pl.t;
    std::vector<PairState>& pairs = pl.pairs;
    push_stage(stages, "plan", t0,
               "r=" + std::to_string(pl.r) + " dir=" + std::to_string(pl.dir) +
                   " t=" + std::to_string(t) + " leftovers=" + std::to_string(pl.leftovers.size()));

    // Distribute the first-path lengths. Terminal-arc pairs share s_target;
    // every other pair splits near evenly.
    {
        for (int i = 2; i <= t; ++i) pairs[(std::size_t)(i - 1)].l1 = 4;
        std::int64_t budget = s_target - 4 * (t - 1);
        while (budget > 0) {
            bool moved = false;
            for (int i = 2; i <= t && budget > 0; ++i) {
                PairState& P = pairs[(std::size_t)(i - 1)];
                if (P.l1 + 2 <= 2 * P.N - 4) {
                    P.l1 += 2;
                    budget -= 2;
                    moved = true;
                }
            }
            if (!moved) break;
        }
        if (budget != 0)
            return failure(std::move(stages), "plan", "terminal-arc length distribution failed");
        for (int i = 1; i <= k; ++i) {
            if (i >= 2 && i <= t) continue;
            PairState& P = pairs[(std::size_t)(i - 1)];
            P.l1 = P.N - (P.N % 2);
            if (P.l1 < 4) P.l1 = 4;
            if (P.l1 > 2 * P.N - 4) P.l1 = 2 * P.N - 4;
        }
    }

    // ----------------------------------------------------------------- G --
    // Connector endpoints. The cycle is
    //   x W2^1 ... Wt^1 y W(t+1)^1 ... Wk^1 W1^1 W2^2 ... Wk^2 W1^2
    // with each path Wi^j running from its X-side entry to its Y-side exit.
    VertexSet taken((std::size_t)n);
    {
        int prev = x;
        for (int i = 2; i <= t; ++i) {
            PairState& P = pairs[(std::size_t)(i - 1)];
            const int xe = best_nbr_into(g, prev, P.xs, P.ys, taken);
            if (xe < 0)
                return failure(std::move(stages), "connect",
                               "no entry vertex into terminal-arc pair " + std::to_string(i));
            P.ex1 = xe;
            taken.set((std::size_t)xe);
            int ye = -1;
            if (i < t) {
                ye = best_into(g, P.ys, pairs[(std::size_t)i].xs, taken);
            } else {
                ye = best_nbr_into(g, y, P.ys, P.xs, taken);
            }
            if (ye < 0)
                return failure(std::move(stages), "connect",
                               "no exit vertex from terminal-arc pair " + std::to_string(i));
            P.ey1 = ye;
            taken.set((std::size_t)ye);
            prev = ye;
        }
    }
    {
        int prev = y;
        std::vector<int> tail;
        for (int i = t + 1; i <= k; ++i) tail.push_back(i);
        tail.push_back(1);
        for (std::size_t ti = 0; ti < tail.size(); ++ti) {
            const int i = tail[ti];
            PairState& P = pairs[(std::size_t)(i - 1)];
            const int xe = best_nbr_into(g, prev, P.xs, P.ys, taken);
            if (xe < 0)
                return failure(std::move(stages), "connect",
                               "no entry vertex into pair " + std::to_string(i));
            P.ex1 = xe;
            taken.set((std::size_t)xe);
            const VertexSet& next_xs =
                (ti + 1 < tail.size()) ? pairs[(std::size_t)(tail[ti + 1] - 1)].xs : pairs[1].xs;
            const int ye = best_into(g, P.ys, next_xs, taken);
            if (ye < 0)
                return failure(std::move(stages), "connect",
                               "no exit vertex from pair " + std::to_string(i));
            P.ey1 = ye;
            taken.set((std::size_t)ye);
            prev = ye;
        }
    }
    {
        int prev = pairs[0].ey1;
        for (int i = 2; i <= k; ++i) {
            PairState& P = pairs[(std::size_t)(i - 1)];
            const int xe = best_nbr_into(g, prev, P.xs, P.ys, taken);
            if (xe < 0)
                return failure(std::move(stages), "connect",
                               "no return entry into pair " + std::to_string(i));
            P.ex2 = xe;
            taken.set((std::size_t)xe);
            const VertexSet& next_xs = (i < k) ? pairs[(std::size_t)i].xs : pairs[0].xs;
            const int ye = best_into(g, P.ys, next_xs, taken);
            if (ye < 0)
                return failure(std::move(stages), "connect",
                               "no return exit from pair " + std::to_string(i));
            P.ey2 = ye;
            taken.set((std::size_t)ye);
            prev = ye;
        }
        PairState& P1 = pairs[0];
        const int xe = best_nbr_into(g, prev, P1.xs, P1.ys, taken);
        if (xe < 0)
            return failure(std::move(stages), "connect", "no return entry into pair 1");
        P1.ex2 = xe;
        taken.set((std::size_t)xe);
        const int ye = best_nbr_into(g, x, P1.ys, P1.xs, taken);
        if (ye < 0)
            return failure(std::move(stages), "connect",
                           "no closing neighbor of x on the return arc");
        P1.ey2 = ye;
        taken.set((std::size_t)ye);
    }
    push_stage(stages, "connect", t0, "");

    // ----------------------------------------------------------------- H --
    const Ratio emb_eps{params.eps.num * 2, params.eps.den};
    const Ratio emb_delta{params.d.num, params.d.den * 2};
    for (int i = 0; i < k; ++i) {
        PairState& P = pairs[(std::size_t)i];
        TwoPathRequest req;
        req.x_side = P.xs;
        req.y_side = P.ys;
        req.x1 = P.ex1;
        req.y1 = P.ey1;
        req.x2 = P.ex2;
        req.y2 = P.ey2;
        req.l1 = P.l1;
        req.l2 = 2 * P.N - P.l1;
        EmbedResult er = embed_two_paths(g, req, emb_eps, emb_delta,
                                         derive_seed(seed, "pair-embed", (std::uint64_t)i));
        if (!er.ok)
            return failure(std::move(stages), "embed",
                           "pair " + std::to_string(i + 1) + ": " + er.error);
        P.p1 = std::move(er.p1);
        P.p2 = std::move(er.p2);
    }
    push_stage(stages, "embed", t0, "");

    // ----------------------------------------------------------------- I --
    // Splice the leftovers back: exactly e1 of them into terminal-arc paths,
    // the rest anywhere on the return arc, capped per pair.
    const int cap = std::max(2, L / 250);
    auto try_splice = [&](int v, std::vector<int>& path) -> bool {
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            if (g.has_edge(path[j], v) && g.has_edge(path[j + 1], v)) {
                path.insert(path.begin() + (std::ptrdiff_t)j + 1, v);
                return true;
            }
        }
        return false;
    };
    std::vector<int> pending = pl.leftovers;
    for (int q = 0; q < e1; ++q) {
        bool done = false;
        for (std::size_t vi = 0; vi < pending.size() && !done; ++vi) {
            const int v = pending[vi];
            std::vector<std::pair<long long, int>> hosts;
            for (int i = 2; i <= t; ++i) {
                PairState& P = pairs[(std::size_t)(i - 1)];
                if (P.splices >= cap) continue;
                hosts.push_back({-(long long)(g.degree_into(v, P.xs) + g.degree_into(v, P.ys)),
                                 i - 1});
            }
            std::sort(hosts.begin(), hosts.end());
            for (auto& [score, pi] : hosts) {
                (void)score;
                if (try_splice(v, pairs[(std::size_t)pi].p1)) {
                    pairs[(std::size_t)pi].splices += 1;
                    pending.erase(pending.begin() + (std::ptrdiff_t)vi);
                    done = true;
                    break;
                }
            }
        }
        if (!done)
            return failure(std::move(stages), "splice",
                           "no leftover vertex fits the terminal arc");
    }
    for (int v : pending) {
        std::vector<std::tuple<long long, int, int>> hosts; // (-score, pair, which path)
        for (int i = 1; i <= k; ++i) {
            PairState& P = pairs[(std::size_t)(i - 1)];
            if (P.splices >= cap) continue;
            const long long sc =
                -(long long)(g.degree_into(v, P.xs) + g.degree_into(v, P.ys));
            hosts.push_back({sc, i - 1, 2});
            if (i < 2 || i > t) hosts.push_back({sc, i - 1, 1});
        }
        std::sort(hosts.begin(), hosts.end());
        bool done = false;
        for (auto& [score, pi, which] : hosts) {
            (void)score;
            PairState& P = pairs[(std::size_t)pi];
            if (try_splice(v, which == 1 ? P.p1 : P.p2)) {
                P.splices += 1;
                done = true;
                break;
            }
        }
        if (!done)
            return failure(std::move(stages), "splice",
                           "leftover vertex " + std::to_string(v) + " has no host slot");
    }
    push_stage(stages, "splice", t0, std::to_string(pl.leftovers.size()) + " spliced");

    // ----------------------------------------------------------------- J --
    std::vector<int> order;
    order.reserve((std::size_t)n);
    order.push_back(x);
    for (int i = 2; i <= t; ++i) append(order, pairs[(std::size_t)(i - 1)].p1);
    order.push_back(y);
    for (int i = t + 1; i <= k; ++i) append(order, pairs[(std::size_t)(i - 1)].p1);
    append(order, pairs[0].p1);
    for (int i = 2; i <= k; ++i) append(order, pairs[(std::size_t)(i - 1)].p2);
    append(order, pairs[0].p2);

    CycleCertificate cert;
    cert.order = std::move(order);
    cert.x = x;
    cert.y = y;
    cert.claimed_distance = h;
    const Verdict v = verify_certificate(g, cert, h);
    push_stage(stages, "assemble", t0, v.ok ? "" : v.reason);
    if (!v.ok) return failure(std::move(stages), "verify", v.reason);
    SolveOutcome out;
    out.ok = true;
    out.cert = std::move(cert);
    out.stages = std::move(stages);
    return out;
}

} // namespace hamlocate
