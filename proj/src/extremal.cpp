#include "hamlocate/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
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

void check_partition_contract(const Graph& g, int x, int y, const VertexSet& v1,
                              const VertexSet& v2) {
    const int n = g.n();
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("extremal solver requires even order >= 4");
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw std::invalid_argument("invalid terminal pair");
    if ((int)v1.capacity() != n || (int)v2.capacity() != n)
        throw std::invalid_argument("partition capacity mismatch");
    if (v1.intersects(v2)) throw std::invalid_argument("partition sides overlap");
    if (v1.count() != (std::size_t)(n / 2) || v2.count() != (std::size_t)(n / 2))
        throw std::invalid_argument("partition sides must be balanced halves");
}

// Lowest-id neighbor of v inside `side` and outside `blocked`. Vertices in
// `defer` are only returned when no other candidate exists; -1 when none.
int pick_nbr(const Graph& g, int v, const VertexSet& side, const VertexSet& blocked,
             const VertexSet* defer = nullptr) {
    const VertexSet& nb = g.neighbors(v);
    const std::size_t n = side.capacity();
    int fallback = -1;
    for (std::size_t i = nb.first(); i < n; i = nb.next(i + 1)) {
        if (!side.test(i) || blocked.test(i)) continue;
        if (defer != nullptr && defer->test(i)) {
            if (fallback < 0) fallback = (int)i;
            continue;
        }
        return (int)i;
    }
    return fallback;
}

// Lowest-id common neighbor of a and b inside `side`, outside `blocked`.
int pick_common(const Graph& g, int a, int b, const VertexSet& side, const VertexSet& blocked,
                const VertexSet* defer = nullptr) {
    VertexSet cs = g.neighbors(a);
    cs &= g.neighbors(b);
    cs &= side;
    const std::size_t n = side.capacity();
    int fallback = -1;
    for (std::size_t i = cs.first(); i < n; i = cs.next(i + 1)) {
        if (blocked.test(i)) continue;
        if (defer != nullptr && defer->test(i)) {
            if (fallback < 0) fallback = (int)i;
            continue;
        }
        return (int)i;
    }
    return fallback;
}

std::vector<int> rev(std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

void append(std::vector<int>& out, const std::vector<int>& p, std::size_t from = 0,
            std::size_t drop_tail = 0) {
    out.insert(out.end(), p.begin() + (std::ptrdiff_t)from, p.end() - (std::ptrdiff_t)drop_tail);
}

VertexSet ground_set(const VertexSet& side, const VertexSet& used, std::initializer_list<int> readd) {
    VertexSet out = side;
    out.subtract(used);
    for (int v : readd) out.set((std::size_t)v);
    return out;
}

// ---------------------------------------------------------------------------
// Scaffold: balanced working sides plus the list of protected middles.
//
// cross_mode == true  : a working vertex needs high degree into the OTHER
//                       side, and a protected segment's ends sit across from
//                       its middle (near-complete-bipartite instances).
// cross_mode == false : a working vertex needs high degree into its OWN side,
//                       and segment ends sit beside the middle (near-split
//                       instances).
// ---------------------------------------------------------------------------

struct Scaffold {
    VertexSet u1, u2;        // working halves, |u1| == |u2| == n/2
    std::vector<int> w1, w2; // protected middles living in u1 / u2
    VertexSet wall;          // all middles as a set
    std::string note;
};

struct ScaffoldOut {
    std::optional<Scaffold> s;
    std::string detail;
};

ScaffoldOut build_scaffold(const Graph& g, const VertexSet& v1in, const VertexSet& v2in,
                           const Params& params, bool cross_mode) {
    const int n = g.n();
    const int h = n / 2;
    const Ratio a1 = params.alpha1();
    const Ratio a2 = params.alpha2();
    const Ratio keep{a1.den - a1.num, a1.den};

    VertexSet stay[2] = {VertexSet((std::size_t)n), VertexSet((std::size_t)n)};
    std::vector<int> v0;
    const VertexSet* sides[2] = {&v1in, &v2in};
    for (int i = 0; i < 2; ++i) {
        const VertexSet& own = *sides[i];
        const VertexSet& other = *sides[1 - i];
        for (std::size_t v = own.first(); v < (std::size_t)n; v = own.next(v + 1)) {
            const int here = g.degree_into((int)v, cross_mode ? other : own);
            if (count_ge(here, keep, h)) {
                stay[i].set(v);
                continue;
            }
            const int there = g.degree_into((int)v, cross_mode ? own : other);
            if (count_ge(there, keep, h)) {
                stay[1 - i].set(v);
                continue;
            }
            v0.push_back((int)v);
        }
    }

    if ((std::int64_t)v0.size() * a2.den > (std::int64_t)a2.num * n)
        return {std::nullopt,
                "exceptional set too large (" + std::to_string(v0.size()) + " of " +
                    std::to_string(n) + " vertices)"};

    std::vector<int> w[2];
    VertexSet midset((std::size_t)n);
    const int s1 = (int)stay[0].count();
    const int s2 = (int)stay[1].count();

    if (s1 <= h && s2 <= h) {
        const int def1 = h - s1;
        // Rank leftover vertices by how much better their segment ends would
        // be served if the middle lands on side 1 rather than side 2.
        std::vector<std::pair<long long, int>> ranked;
        ranked.reserve(v0.size());
        for (int v : v0) {
            const long long d1 = g.degree_into(v, stay[0]);
            const long long d2 = g.degree_into(v, stay[1]);
            const long long key = cross_mode ? (d2 - d1) : (d1 - d2);
            ranked.push_back({-key, v});
        }
        std::sort(ranked.begin(), ranked.end());
        for (int i = 0; i < (int)ranked.size(); ++i) {
            const int v = ranked[i].second;
            const int side = (i < def1) ? 0 : 1;
            stay[side].set((std::size_t)v);
            w[side].push_back(v);
            midset.set((std::size_t)v);
        }
    } else {
        const int p = (s1 > h) ? 0 : 1; // the oversized side
        const int q = 1 - p;
        const int sur = (p == 0 ? s1 : s2) - h;
        for (int v : v0) {
            stay[q].set((std::size_t)v);
            w[q].push_back(v);
            midset.set((std::size_t)v);
        }
        VertexSet endpool = cross_mode ? stay[p] : stay[q];
        endpool.subtract(midset);
        // First choice: vertices of the oversized side that are rich toward
        // the pool their segment ends must come from.
        std::vector<std::pair<long long, int>> cand;
        for (std::size_t v = stay[p].first(); v < (std::size_t)n; v = stay[p].next(v + 1)) {
            const int d = g.degree_into((int)v, endpool);
            if (count_ge(d, a1, h)) cand.push_back({-(long long)d, (int)v});
        }
        if ((int)cand.size() >= sur) {
            std::sort(cand.begin(), cand.end());
            for (int i = 0; i < sur; ++i) {
                const int v = cand[i].second;
                stay[p].reset((std::size_t)v);
                stay[q].set((std::size_t)v);
                w[q].push_back(v);
                midset.set((std::size_t)v);
            }
        } else {
            // Fallback: greedily extract disjoint middle-plus-two-ends
            // systems so that moving the middles keeps them coverable.
            VertexSet taken((std::size_t)n);
            std::vector<int> moved;
            for (std::size_t wv = stay[p].first();
                 wv < (std::size_t)n && (int)moved.size() < sur; wv = stay[p].next(wv + 1)) {
                if (taken.test(wv)) continue;
                VertexSet nb = g.neighbors((int)wv);
                nb &= endpool;
                int a = -1, b = -1;
                for (std::size_t c = nb.first(); c < (std::size_t)n; c = nb.next(c + 1)) {
                    if (taken.test(c) || c == wv) continue;
                    if (a < 0) {
                        a = (int)c;
                    } else {
                        b = (int)c;
                        break;
                    }
                }
                if (a < 0 || b < 0) continue;
                taken.set(wv);
                taken.set((std::size_t)a);
                taken.set((std::size_t)b);
                moved.push_back((int)wv);
            }
            if ((int)moved.size() < sur)
                return {std::nullopt, "could not extract enough protected segments (need " +
                                          std::to_string(sur) + ", found " +
                                          std::to_string(moved.size()) + ")"};
            for (int v : moved) {
                stay[p].reset((std::size_t)v);
                stay[q].set((std::size_t)v);
                w[q].push_back(v);
                midset.set((std::size_t)v);
            }
        }
    }

    if (stay[0].count() != (std::size_t)h || stay[1].count() != (std::size_t)h)
        return {std::nullopt, "working sides did not balance"};

    if (cross_mode) {
        if ((std::int64_t)(w[0].size() + w[1].size()) * a2.den > (std::int64_t)a2.num * n)
            return {std::nullopt, "too many protected vertices (" +
                                      std::to_string(w[0].size() + w[1].size()) + ")"};
    } else {
        for (int i = 0; i < 2; ++i)
            if ((std::int64_t)w[i].size() * a2.den * 2 > (std::int64_t)a2.num * n)
                return {std::nullopt, "too many protected vertices on one side (" +
                                          std::to_string(w[i].size()) + ")"};
    }

    // Every unprotected vertex must clear the working-degree floor
    // (1 - a1 - 2*a2) * n/2 toward the side its cycle edges will use.
    const std::int64_t fden = (std::int64_t)a1.den * a2.den;
    const std::int64_t fnum =
        fden - (std::int64_t)a1.num * a2.den - 2 * (std::int64_t)a2.num * a1.den;

    Scaffold sc;
    sc.u1 = stay[0];
    sc.u2 = stay[1];
    sc.w1 = w[0];
    sc.w2 = w[1];
    std::sort(sc.w1.begin(), sc.w1.end());
    std::sort(sc.w2.begin(), sc.w2.end());
    sc.wall = midset;

    for (int i = 0; i < 2; ++i) {
        const VertexSet& own = (i == 0) ? sc.u1 : sc.u2;
        const VertexSet& tgt = cross_mode ? ((i == 0) ? sc.u2 : sc.u1) : own;
        for (std::size_t v = own.first(); v < (std::size_t)n; v = own.next(v + 1)) {
            if (sc.wall.test(v)) continue;
            const std::int64_t d = g.degree_into((int)v, tgt);
            if (d * fden < fnum * (std::int64_t)h)
                return {std::nullopt,
                        "vertex " + std::to_string(v) + " misses the working-degree floor"};
        }
    }

    sc.note = "protected " + std::to_string(sc.w1.size()) + "+" + std::to_string(sc.w2.size());
    return {std::move(sc), ""};
}

// ---------------------------------------------------------------------------
// Protected path for the near-complete-bipartite route: strings every unused
// middle into one alternating path with balanced side counts. Middles in u1
// get their flanking ends from u2 and vice versa; consecutive segments are
// linked through a common neighbor; the two blocks are stitched by one extra
// cross pair. When no middle is left a single cross edge stands in.
// The returned path is oriented u1-end first. All its vertices get marked.
// ---------------------------------------------------------------------------

struct Strung {
    bool ok = false;
    std::vector<int> path; // path.front() in u1, path.back() in u2
    std::string err;
};

Strung string_protected_path(const Graph& g, const VertexSet& u1, const VertexSet& u2,
                             const std::vector<int>& w1, const std::vector<int>& w2,
                             const VertexSet& wall, VertexSet& used) {
    Strung out;
    VertexSet hard = used;
    hard |= wall; // ends and links must be unprotected vertices
    auto mark = [&](int v) {
        used.set((std::size_t)v);
        hard.set((std::size_t)v);
    };

    auto build_block = [&](const std::vector<int>& mids, const VertexSet& end_side,
                           const VertexSet& link_side, std::vector<int>& block) -> bool {
        int prev_b = -1;
        for (int w : mids) {
            if (used.test((std::size_t)w)) continue;
            mark(w);
            const int a = pick_nbr(g, w, end_side, hard);
            if (a < 0) {
                out.err = "protected segment at vertex " + std::to_string(w) + " has no free end";
                return false;
            }
            mark(a);
            const int b = pick_nbr(g, w, end_side, hard);
            if (b < 0) {
                out.err =
                    "protected segment at vertex " + std::to_string(w) + " has one free end only";
                return false;
            }
            mark(b);
            if (prev_b >= 0) {
                const int c = pick_common(g, prev_b, a, link_side, hard);
                if (c < 0) {
                    out.err = "no free link between protected segments";
                    return false;
                }
                mark(c);
                block.push_back(c);
            }
            block.push_back(a);
            block.push_back(w);
            block.push_back(b);
            prev_b = b;
        }
        return true;
    };

    std::vector<int> b1, b2;
    if (!build_block(w1, u2, u1, b1)) return out;
    if (!build_block(w2, u1, u2, b2)) return out;

    if (!b1.empty() && !b2.empty()) {
        const int vp = pick_nbr(g, b2.back(), u2, hard);
        if (vp < 0) {
            out.err = "no free cross partner to stitch the protected blocks";
            return out;
        }
        mark(vp);
        const int up = pick_common(g, vp, b1.back(), u1, hard);
        if (up < 0) {
            out.err = "no free stitch vertex between the protected blocks";
            return out;
        }
        mark(up);
        std::vector<int> path = b1;
        path.push_back(up);
        path.push_back(vp);
        path.insert(path.end(), b2.rbegin(), b2.rend());
        out.path = rev(std::move(path)); // orient u1-end (b2.front()) first
    } else if (!b1.empty()) {
        const int up = pick_nbr(g, b1.back(), u1, hard);
        if (up < 0) {
            out.err = "no free side-one end for the protected block";
            return out;
        }
        mark(up);
        std::vector<int> path = b1;
        path.push_back(up);
        out.path = rev(std::move(path));
    } else if (!b2.empty()) {
        const int vp = pick_nbr(g, b2.back(), u2, hard);
        if (vp < 0) {
            out.err = "no free side-two end for the protected block";
            return out;
        }
        mark(vp);
        out.path = b2;
        out.path.push_back(vp);
    } else {
        const std::size_t n = u1.capacity();
        for (std::size_t p = u1.first(); p < n; p = u1.next(p + 1)) {
            if (hard.test(p)) continue;
            const int q = pick_nbr(g, (int)p, u2, hard);
            if (q < 0) continue;
            mark((int)p);
            mark(q);
            out.path = {(int)p, q};
            break;
        }
        if (out.path.empty()) {
            out.err = "no spare cross edge for the protected path";
            return out;
        }
    }
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Near-complete-bipartite case assemblies.
// ---------------------------------------------------------------------------

struct Ec1World {
    const Graph* g = nullptr;
    int n = 0;
    int h = 0;
    VertexSet u1, u2;
    std::vector<int> w1, w2;
    VertexSet wall;
    Ratio eps, delta;
    std::uint64_t seed = 0;
};

std::optional<EmbedResult> run_embed(const Ec1World& w, const VertexSet& g1, const VertexSet& g2,
                                     int x1, int y1, int x2, int y2, int l1, int l2, int salt,
                                     std::string& err) {
    const long long n1 = (long long)g1.count();
    const long long n2 = (long long)g2.count();
    if (n1 != n2) {
        err = "ground sides out of balance (" + std::to_string(n1) + " vs " + std::to_string(n2) +
              ")";
        return std::nullopt;
    }
    const long long twoN = 2 * n1;
    if (l1 < 4 || l2 < 4 || (l1 % 2) != 0 || (l2 % 2) != 0 || l1 + l2 != twoN ||
        l1 > twoN - 4 || l2 > twoN - 4) {
        err = "path lengths out of range (l1=" + std::to_string(l1) +
              ", l2=" + std::to_string(l2) + ", ground=" + std::to_string(twoN) + ")";
        return std::nullopt;
    }
    if (x1 < 0 || y1 < 0 || x2 < 0 || y2 < 0 || x1 == x2 || y1 == y2) {
        err = "missing or colliding path endpoints";
        return std::nullopt;
    }
    if (!g1.test((std::size_t)x1) || !g1.test((std::size_t)x2) || !g2.test((std::size_t)y1) ||
        !g2.test((std::size_t)y2)) {
        err = "a path endpoint is not on its ground side";
        return std::nullopt;
    }
    TwoPathRequest req;
    req.x_side = g1;
    req.y_side = g2;
    req.x1 = x1;
    req.y1 = y1;
    req.x2 = x2;
    req.y2 = y2;
    req.l1 = l1;
    req.l2 = l2;
    EmbedResult er = embed_two_paths(*w.g, req, w.eps, w.delta,
                                     derive_seed(w.seed, "arc-embed", (std::uint64_t)salt));
    if (!er.ok) {
        err = er.error;
        return std::nullopt;
    }
    return er;
}

SolveOutcome finish_cycle(const Ec1World& w, std::vector<int> order, int x, int y,
                          std::vector<StageNote> stages, Clock::time_point t0) {
    CycleCertificate cert;
    cert.order = std::move(order);
    cert.x = x;
    cert.y = y;
    cert.claimed_distance = w.h;
    const Verdict v = verify_certificate(*w.g, cert, w.h);
    push_stage(stages, "assemble", t0, v.ok ? "" : v.reason);
    if (!v.ok) return failure(std::move(stages), "verify", v.reason);
    SolveOutcome out;
    out.ok = true;
    out.cert = std::move(cert);
    out.stages = std::move(stages);
    return out;
}

// Terminals on different sides, n/2 odd, no protected middles besides the
// terminals themselves: both connector fans are purely cross.
SolveOutcome ec1_diff_odd_plain(const Ec1World& w, int x, int y, std::vector<StageNote> stages,
                                Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)x);
    used.set((std::size_t)y);

    const int y1 = pick_nbr(g, x, w.u2, used);
    if (y1 < 0) return failure(std::move(stages), "connect", "terminal x has no free cross neighbor");
    used.set((std::size_t)y1);
    const int y2 = pick_nbr(g, x, w.u2, used);
    if (y2 < 0)
        return failure(std::move(stages), "connect", "terminal x has one free cross neighbor only");
    used.set((std::size_t)y2);
    const int x1 = pick_nbr(g, y, w.u1, used);
    if (x1 < 0) return failure(std::move(stages), "connect", "terminal y has no free cross neighbor");
    used.set((std::size_t)x1);
    const int x2 = pick_nbr(g, y, w.u1, used);
    if (x2 < 0)
        return failure(std::move(stages), "connect", "terminal y has one free cross neighbor only");
    used.set((std::size_t)x2);

    const VertexSet g1 = ground_set(w.u1, used, {x1, x2});
    const VertexSet g2 = ground_set(w.u2, used, {y1, y2});
    const int l1 = w.h - 1;
    const int l2 = w.h - 1;
    std::string err;
    auto er = run_embed(w, g1, g2, x1, y1, x2, y2, l1, l2, 0, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    order.push_back(x);
    append(order, rev(er->p2)); // y2 ... x2
    order.push_back(y);
    append(order, er->p1); // x1 ... y1, wraps to x
    return finish_cycle(w, std::move(order), x, y, std::move(stages), t0);
}

// Terminals on different sides, n/2 odd, protected middles present: the
// protected path joins one connector fan.
SolveOutcome ec1_diff_odd(const Ec1World& w, int x, int y, std::vector<StageNote> stages,
                          Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)x);
    used.set((std::size_t)y);

    Strung st = string_protected_path(g, w.u1, w.u2, w.w1, w.w2, w.wall, used);
    if (!st.ok) return failure(std::move(stages), "protect", st.err);
    const int x1 = st.path.front();
    const int y1 = st.path.back();
    const int plen = (int)st.path.size();

    int y2 = -1, x4 = -1;
    {
        const VertexSet& nb = g.neighbors(x);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            const int common = pick_common(g, y1, (int)c, w.u1, used);
            if (common >= 0) {
                y2 = (int)c;
                x4 = common;
                break;
            }
        }
    }
    if (y2 < 0)
        return failure(std::move(stages), "connect",
                       "no neighbor of x shares a free side-one vertex with the protected path end");
    used.set((std::size_t)y2);
    used.set((std::size_t)x4);
    const int y3 = pick_nbr(g, x, w.u2, used);
    if (y3 < 0) return failure(std::move(stages), "connect", "terminal x lacks a second free cross neighbor");
    used.set((std::size_t)y3);

    int x2 = -1, y4 = -1;
    {
        const VertexSet& nb = g.neighbors(y);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u1.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u2, used);
            if (partner >= 0) {
                x2 = (int)c;
                y4 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (x2 < 0)
        return failure(std::move(stages), "connect",
                       "no neighbor of y has a free cross partner");
    used.set((std::size_t)y4);
    const int x3 = pick_nbr(g, y, w.u1, used);
    if (x3 < 0) return failure(std::move(stages), "connect", "terminal y lacks a second free cross neighbor");
    used.set((std::size_t)x3);

    const VertexSet g1 = ground_set(w.u1, used, {x1, x3});
    const VertexSet g2 = ground_set(w.u2, used, {y3, y4});
    const int l1 = w.h - plen - 3;
    const int l2 = 2 * (int)g1.count() - l1;
    std::string err;
    auto er = run_embed(w, g1, g2, x1, y4, x3, y3, l1, l2, 1, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    order.push_back(x);
    append(order, rev(er->p2)); // y3 ... x3
    order.push_back(y);
    order.push_back(x2);
    append(order, rev(er->p1)); // y4 ... x1
    append(order, st.path, 1);  // protected path continues from x1 to y1
    order.push_back(x4);
    order.push_back(y2);
    return finish_cycle(w, std::move(order), x, y, std::move(stages), t0);
}

// Terminals on different sides, n/2 even: one same-side edge per connector
// fan fixes the parity.
SolveOutcome ec1_diff_even(const Ec1World& w, int x, int y, std::vector<StageNote> stages,
                           Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)x);
    used.set((std::size_t)y);

    // y's own-side neighborhood can be a single vertex; reserve it before
    // anything else is allowed to consume it.
    const int y4 = pick_nbr(g, y, w.u2, used);
    if (y4 < 0)
        return failure(std::move(stages), "connect", "terminal y has no free same-side neighbor");
    used.set((std::size_t)y4);

    Strung st = string_protected_path(g, w.u1, w.u2, w.w1, w.w2, w.wall, used);
    if (!st.ok) return failure(std::move(stages), "protect", st.err);
    const int x1 = st.path.front();
    const int y1 = st.path.back();

    int y2 = -1, x4 = -1;
    {
        const VertexSet& nb = g.neighbors(x);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            const int common = pick_common(g, y1, (int)c, w.u1, used);
            if (common >= 0) {
                y2 = (int)c;
                x4 = common;
                break;
            }
        }
    }
    if (y2 < 0)
        return failure(std::move(stages), "connect",
                       "no neighbor of x shares a free side-one vertex with the protected path end");
    used.set((std::size_t)y2);
    used.set((std::size_t)x4);
    const int y3 = pick_nbr(g, x, w.u2, used);
    if (y3 < 0) return failure(std::move(stages), "connect", "terminal x lacks a second free cross neighbor");
    used.set((std::size_t)y3);

    // y sits on side two: one cross neighbor with a same-side partner, plus
    // one same-side neighbor of y itself.
    int x2 = -1, x3 = -1;
    {
        const VertexSet& nb = g.neighbors(y);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u1.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u1, used);
            if (partner >= 0) {
                x2 = (int)c;
                x3 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (x2 < 0)
        return failure(std::move(stages), "connect",
                       "no cross neighbor of y has a same-side partner");
    used.set((std::size_t)x3);

    const VertexSet g1 = ground_set(w.u1, used, {x1, x3});
    const VertexSet g2 = ground_set(w.u2, used, {y3, y4});
    const int l2 = w.h - 2;
    const int l1 = 2 * (int)g1.count() - l2;
    std::string err;
    auto er = run_embed(w, g1, g2, x1, y4, x3, y3, l1, l2, 2, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    order.push_back(x);
    append(order, rev(er->p2)); // y3 ... x3
    order.push_back(x2);        // same-side edge x3-x2
    order.push_back(y);
    append(order, rev(er->p1)); // y4 ... x1 (same-side edge y-y4)
    append(order, st.path, 1);  // x1 ... y1
    order.push_back(x4);
    order.push_back(y2);
    return finish_cycle(w, std::move(order), x, y, std::move(stages), t0);
}

// Terminals on the same side, n/2 even: both fans stay purely cross.
SolveOutcome ec1_same_even(const Ec1World& w, int x, int y, std::vector<StageNote> stages,
                           Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)x);
    used.set((std::size_t)y);

    Strung st = string_protected_path(g, w.u1, w.u2, w.w1, w.w2, w.wall, used);
    if (!st.ok) return failure(std::move(stages), "protect", st.err);
    const int x1 = st.path.front();
    const int y1 = st.path.back();

    int y2 = -1, x4 = -1;
    {
        const VertexSet& nb = g.neighbors(x);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            const int common = pick_common(g, y1, (int)c, w.u1, used);
            if (common >= 0) {
                y2 = (int)c;
                x4 = common;
                break;
            }
        }
    }
    if (y2 < 0)
        return failure(std::move(stages), "connect",
                       "no neighbor of x shares a free side-one vertex with the protected path end");
    used.set((std::size_t)y2);
    used.set((std::size_t)x4);
    const int y3 = pick_nbr(g, x, w.u2, used);
    if (y3 < 0) return failure(std::move(stages), "connect", "terminal x lacks a second free cross neighbor");
    used.set((std::size_t)y3);

    int y4 = -1, x2 = -1;
    {
        const VertexSet& nb = g.neighbors(y);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u1, used);
            if (partner >= 0) {
                y4 = (int)c;
                x2 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (y4 < 0)
        return failure(std::move(stages), "connect",
                       "no neighbor of y has a free side-one partner");
    used.set((std::size_t)x2);
    const int y5 = pick_nbr(g, y, w.u2, used);
    if (y5 < 0) return failure(std::move(stages), "connect", "terminal y lacks a second free cross neighbor");
    used.set((std::size_t)y5);

    const VertexSet g1 = ground_set(w.u1, used, {x1, x2});
    const VertexSet g2 = ground_set(w.u2, used, {y3, y5});
    const int l2 = w.h - 2;
    const int l1 = 2 * (int)g1.count() - l2;
    std::string err;
    auto er = run_embed(w, g1, g2, x1, y5, x2, y3, l1, l2, 3, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    order.push_back(x);
    append(order, rev(er->p2)); // y3 ... x2
    order.push_back(y4);
    order.push_back(y);
    append(order, rev(er->p1)); // y5 ... x1
    append(order, st.path, 1);  // x1 ... y1
    order.push_back(x4);
    order.push_back(y2);
    return finish_cycle(w, std::move(order), x, y, std::move(stages), t0);
}

// Terminals on the same side, n/2 odd, first vertex has a spare same-side
// neighbor: one same-side edge at each fan fixes the parity.
SolveOutcome ec1_same_odd_spare(const Ec1World& w, int xx, int yy, int certx, int certy,
                                std::vector<StageNote> stages, Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)xx);
    used.set((std::size_t)yy);

    const int x1 = pick_nbr(g, xx, w.u1, used, &w.wall);
    if (x1 < 0)
        return failure(std::move(stages), "connect", "terminal has no spare same-side neighbor");
    used.set((std::size_t)x1);

    int y1 = -1, y2 = -1;
    {
        const VertexSet& nb = g.neighbors(xx);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u2, used, &w.wall);
            if (partner >= 0) {
                y1 = (int)c;
                y2 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (y1 < 0)
        return failure(std::move(stages), "connect",
                       "no cross neighbor of the terminal has a same-side partner");
    used.set((std::size_t)y2);

    const int y3 = pick_nbr(g, x1, w.u2, used, &w.wall);
    if (y3 < 0) return failure(std::move(stages), "connect", "spare neighbor has no free cross edge");
    used.set((std::size_t)y3);
    const int x3 = pick_nbr(g, y3, w.u1, used, &w.wall);
    if (x3 < 0) return failure(std::move(stages), "connect", "no free return vertex for the spare fan");
    used.set((std::size_t)x3);
    const int x2 = pick_nbr(g, y2, w.u1, used, &w.wall);
    if (x2 < 0) return failure(std::move(stages), "connect", "no free return vertex for the paired fan");
    used.set((std::size_t)x2);

    const int y4 = pick_nbr(g, yy, w.u2, used, &w.wall);
    if (y4 < 0) return failure(std::move(stages), "connect", "second terminal has no free cross neighbor");
    used.set((std::size_t)y4);
    const int y5 = pick_nbr(g, yy, w.u2, used, &w.wall);
    if (y5 < 0)
        return failure(std::move(stages), "connect", "second terminal has one free cross neighbor only");
    used.set((std::size_t)y5);
    const int x4 = pick_nbr(g, y4, w.u1, used, &w.wall);
    if (x4 < 0) return failure(std::move(stages), "connect", "no free return vertex at the second terminal");
    used.set((std::size_t)x4);

    Strung st = string_protected_path(g, w.u1, w.u2, w.w1, w.w2, w.wall, used);
    if (!st.ok) return failure(std::move(stages), "protect", st.err);
    const int x5 = st.path.front();
    const int y6 = st.path.back();
    const int plen = (int)st.path.size();

    const int y7 = pick_common(g, x2, x5, w.u2, used);
    if (y7 < 0)
        return failure(std::move(stages), "connect",
                       "no common free neighbor closes the protected loop");
    used.set((std::size_t)y7);

    const VertexSet g1 = ground_set(w.u1, used, {x3, x4});
    const VertexSet g2 = ground_set(w.u2, used, {y5, y6});
    const int l1 = w.h - plen - 5;
    const int l2 = 2 * (int)g1.count() - l1;
    std::string err;
    auto er = run_embed(w, g1, g2, x4, y6, x3, y5, l1, l2, 4, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    append(order, st.path);        // x5 ... y6
    append(order, rev(er->p1), 1); // (y6) ... x4
    order.push_back(y4);
    order.push_back(yy);
    append(order, rev(er->p2)); // y5 ... x3
    order.push_back(y3);
    order.push_back(x1);
    order.push_back(xx);
    order.push_back(y1);
    order.push_back(y2);
    order.push_back(x2);
    order.push_back(y7); // wraps to x5
    return finish_cycle(w, std::move(order), certx, certy, std::move(stages), t0);
}

// Terminals on the same side, n/2 odd, neither terminal has a spare
// same-side neighbor: parity is fixed by one borrowed same-side edge per
// side instead.
SolveOutcome ec1_same_odd_borrow(const Ec1World& w, int xx, int yy, int certx, int certy,
                                 std::vector<StageNote> stages, Clock::time_point t0) {
    const Graph& g = *w.g;
    VertexSet used((std::size_t)w.n);
    used.set((std::size_t)xx);
    used.set((std::size_t)yy);

    int y1 = -1, y2 = -1;
    {
        const VertexSet& nb = g.neighbors(xx);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u2, used, &w.wall);
            if (partner >= 0) {
                y1 = (int)c;
                y2 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (y1 < 0)
        return failure(std::move(stages), "connect",
                       "no cross neighbor of the terminal has a same-side partner");
    used.set((std::size_t)y2);

    const int y3 = pick_nbr(g, xx, w.u2, used, &w.wall);
    if (y3 < 0) return failure(std::move(stages), "connect", "terminal lacks a second free cross neighbor");
    used.set((std::size_t)y3);

    int x1 = -1, x2 = -1;
    {
        const VertexSet& nb = g.neighbors(y3);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u1.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u1, used, &w.wall);
            if (partner >= 0) {
                x1 = (int)c;
                x2 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (x1 < 0)
        return failure(std::move(stages), "connect",
                       "no borrowed same-side edge is reachable from the terminal");
    used.set((std::size_t)x2);

    const int x3 = pick_nbr(g, y2, w.u1, used, &w.wall);
    if (x3 < 0) return failure(std::move(stages), "connect", "no free return vertex for the paired fan");
    used.set((std::size_t)x3);
    const int y4 = pick_nbr(g, x2, w.u2, used, &w.wall);
    if (y4 < 0) return failure(std::move(stages), "connect", "borrowed edge has no free cross continuation");
    used.set((std::size_t)y4);
    const int x4 = pick_nbr(g, y4, w.u1, used, &w.wall);
    if (x4 < 0) return failure(std::move(stages), "connect", "no free return vertex after the borrowed edge");
    used.set((std::size_t)x4);

    Strung st = string_protected_path(g, w.u1, w.u2, w.w1, w.w2, w.wall, used);
    if (!st.ok) return failure(std::move(stages), "protect", st.err);
    const int x5 = st.path.front();
    const int y5 = st.path.back();
    const int plen = (int)st.path.size();

    int y6 = -1, x6 = -1;
    {
        const VertexSet& nb = g.neighbors(yy);
        for (std::size_t c = nb.first(); c < (std::size_t)w.n; c = nb.next(c + 1)) {
            if (!w.u2.test(c) || used.test(c)) continue;
            used.set(c);
            const int partner = pick_nbr(g, (int)c, w.u1, used, &w.wall);
            if (partner >= 0) {
                y6 = (int)c;
                x6 = partner;
                break;
            }
            used.reset(c);
        }
    }
    if (y6 < 0)
        return failure(std::move(stages), "connect",
                       "no cross neighbor of the second terminal has a side-one partner");
    used.set((std::size_t)x6);
    const int y7 = pick_nbr(g, yy, w.u2, used, &w.wall);
    if (y7 < 0)
        return failure(std::move(stages), "connect", "second terminal lacks a second free cross neighbor");
    used.set((std::size_t)y7);

    const int y8 = pick_common(g, x3, x5, w.u2, used);
    if (y8 < 0)
        return failure(std::move(stages), "connect",
                       "no common free neighbor closes the protected loop");
    used.set((std::size_t)y8);

    const VertexSet g1 = ground_set(w.u1, used, {x4, x6});
    const VertexSet g2 = ground_set(w.u2, used, {y5, y7});
    const int l1 = w.h - plen - 5;
    const int l2 = 2 * (int)g1.count() - l1;
    std::string err;
    auto er = run_embed(w, g1, g2, x6, y5, x4, y7, l1, l2, 5, err);
    push_stage(stages, "embed", t0, er ? "" : err);
    if (!er) return failure(std::move(stages), "embed", err);

    std::vector<int> order;
    order.reserve((std::size_t)w.n);
    append(order, st.path);        // x5 ... y5
    append(order, rev(er->p1), 1); // (y5) ... x6
    order.push_back(y6);
    order.push_back(yy);
    append(order, rev(er->p2)); // y7 ... x4
    order.push_back(y4);
    order.push_back(x2);
    order.push_back(x1);
    order.push_back(y3);
    order.push_back(xx);
    order.push_back(y1);
    order.push_back(y2);
    order.push_back(x3);
    order.push_back(y8); // wraps to x5
    return finish_cycle(w, std::move(order), certx, certy, std::move(stages), t0);
}

// ---------------------------------------------------------------------------
// Near-split side paths.
// ---------------------------------------------------------------------------

// Spanning path of g[ground] from `from` to `to` that keeps every listed
// middle inside an explicitly strung short segment; the rest of the side is
// covered by the dense path search.
std::optional<std::vector<int>> ham_path_in_part(const Graph& g, const VertexSet& ground,
                                                 int from, int to, const std::vector<int>& mids,
                                                 std::uint64_t seed, std::string& err) {
    const std::size_t n = ground.capacity();
    if (from == to || !ground.test((std::size_t)from) || !ground.test((std::size_t)to)) {
        err = "invalid side-path endpoints";
        return std::nullopt;
    }

    std::vector<int> live;
    VertexSet midset(n);
    for (int m : mids) {
        if (m == from || m == to || !ground.test((std::size_t)m)) continue;
        if (midset.test((std::size_t)m)) continue;
        midset.set((std::size_t)m);
        live.push_back(m);
    }
    std::sort(live.begin(), live.end());

    VertexSet hard = midset;
    hard.set((std::size_t)from);
    hard.set((std::size_t)to);
    auto mark = [&](int v) { hard.set((std::size_t)v); };

    if (live.empty()) {
        VertexSet rest = ground;
        rest.reset((std::size_t)from);
        rest.reset((std::size_t)to);
        const std::size_t cnt = rest.count();
        if (cnt == 0) {
            if (!g.has_edge(from, to)) {
                err = "side endpoints are not adjacent";
                return std::nullopt;
            }
            return std::vector<int>{from, to};
        }
        if (cnt == 1) {
            const int z = (int)rest.first();
            if (!g.has_edge(from, z) || !g.has_edge(z, to)) {
                err = "three-vertex side is not a path";
                return std::nullopt;
            }
            return std::vector<int>{from, z, to};
        }
        const int u = pick_nbr(g, from, rest, VertexSet(n));
        if (u < 0) {
            err = "side start has no usable neighbor";
            return std::nullopt;
        }
        VertexSet blocked(n);
        blocked.set((std::size_t)u);
        const int v = pick_nbr(g, to, rest, blocked);
        if (v < 0) {
            err = "side end has no usable neighbor";
            return std::nullopt;
        }
        auto mid = hamiltonian_path_dense(g, rest, u, v, derive_seed(seed, "side-dense", 0));
        if (!mid) {
            err = "dense side-path search failed";
            return std::nullopt;
        }
        std::vector<int> out;
        out.reserve(cnt + 2);
        out.push_back(from);
        append(out, *mid);
        out.push_back(to);
        return out;
    }

    const int u = pick_nbr(g, from, ground, hard);
    if (u < 0) {
        err = "side start has no unprotected neighbor";
        return std::nullopt;
    }
    mark(u);
    const int v = pick_nbr(g, to, ground, hard);
    if (v < 0) {
        err = "side end has no unprotected neighbor";
        return std::nullopt;
    }
    mark(v);

    // String the middles: a1 w1 b1 c1 a2 w2 b2 c2 ... bt ct v.
    std::vector<int> p1;
    int prev_b = -1;
    for (int wv : live) {
        const int a = pick_nbr(g, wv, ground, hard);
        if (a < 0) {
            err = "protected segment at vertex " + std::to_string(wv) + " has no free end";
            return std::nullopt;
        }
        mark(a);
        const int b = pick_nbr(g, wv, ground, hard);
        if (b < 0) {
            err = "protected segment at vertex " + std::to_string(wv) + " has one free end only";
            return std::nullopt;
        }
        mark(b);
        if (prev_b >= 0) {
            const int c = pick_common(g, prev_b, a, ground, hard);
            if (c < 0) {
                err = "no free link between protected segments";
                return std::nullopt;
            }
            mark(c);
            p1.push_back(c);
        }
        p1.push_back(a);
        p1.push_back(wv);
        p1.push_back(b);
        prev_b = b;
    }
    const int ct = pick_common(g, prev_b, v, ground, hard);
    if (ct < 0) {
        err = "no free link from the protected block to the side end";
        return std::nullopt;
    }
    mark(ct);
    p1.push_back(ct);
    p1.push_back(v);

    const int a1 = p1.front();
    VertexSet rest = ground;
    rest.subtract(VertexSet::of(n, p1));
    rest.reset((std::size_t)from);
    rest.reset((std::size_t)to);
    rest.set((std::size_t)a1);
    // `u` is not on the strung block, so it stays in `rest`.
    std::optional<std::vector<int>> mid;
    if (rest.count() == 2) {
        if (g.has_edge(u, a1)) mid = std::vector<int>{u, a1};
    } else {
        mid = hamiltonian_path_dense(g, rest, u, a1, derive_seed(seed, "side-dense", 1));
    }
    if (!mid) {
        err = "dense side-path search failed around the protected block";
        return std::nullopt;
    }

    std::vector<int> out;
    out.reserve(ground.count());
    out.push_back(from);
    append(out, *mid);  // u ... a1
    append(out, p1, 1); // (a1) w1 b1 ... v
    out.push_back(to);
    return out;
}

// Shortest bridge (at most `max_edges` edges) from src to dst inside
// `allowed`; both endpoints must be allowed. Plain breadth-first search.
std::optional<std::vector<int>> bfs_bridge(const Graph& g, const VertexSet& allowed, int src,
                                           int dst, int max_edges) {
    const std::size_t n = allowed.capacity();
    if (!allowed.test((std::size_t)src) || !allowed.test((std::size_t)dst)) return std::nullopt;
    std::vector<int> parent(n, -2);
    std::vector<int> depth(n, 0);
    std::vector<int> queue;
    parent[(std::size_t)src] = -1;
    queue.push_back(src);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int cur = queue[qi];
        if (cur == dst) break;
        if (depth[(std::size_t)cur] >= max_edges) continue;
        const VertexSet& nb = g.neighbors(cur);
        for (std::size_t c = nb.first(); c < n; c = nb.next(c + 1)) {
            if (!allowed.test(c) || parent[c] != -2) continue;
            parent[c] = cur;
            depth[c] = depth[(std::size_t)cur] + 1;
            queue.push_back((int)c);
        }
    }
    if (parent[(std::size_t)dst] == -2) return std::nullopt;
    std::vector<int> path;
    for (int cur = dst; cur != -1; cur = parent[(std::size_t)cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

// ---------------------------------------------------------------------------
// Near-complete-bipartite solver.
// ---------------------------------------------------------------------------

SolveOutcome solve_ec1(const Graph& g, int x, int y, const VertexSet& v1, const VertexSet& v2,
                       const Params& params, std::uint64_t seed) {
    check_partition_contract(g, x, y, v1, v2);
    const auto t0 = Clock::now();
    std::vector<StageNote> stages;

    ScaffoldOut sc = build_scaffold(g, v1, v2, params, /*cross_mode=*/true);
    if (!sc.s) {
        push_stage(stages, "scaffold", t0, sc.detail);
        return failure(std::move(stages), "scaffold", sc.detail);
    }
    push_stage(stages, "scaffold", t0, sc.s->note);

    Ec1World w;
    w.g = &g;
    w.n = g.n();
    w.h = g.n() / 2;
    w.u1 = sc.s->u1;
    w.u2 = sc.s->u2;
    w.w1 = sc.s->w1;
    w.w2 = sc.s->w2;
    w.wall = sc.s->wall;
    w.eps = Ratio{params.eps.num * 2, params.eps.den};
    w.delta = Ratio{params.d.num, params.d.den * 2};
    w.seed = seed;

    if (!w.u1.test((std::size_t)x)) {
        std::swap(w.u1, w.u2);
        std::swap(w.w1, w.w2);
    }
    const bool same_side = w.u1.test((std::size_t)y);
    const bool h_odd = (w.h % 2) == 1;

    if (!same_side && h_odd) {
        int live = 0;
        for (int m : w.w1)
            if (m != x && m != y) ++live;
        for (int m : w.w2)
            if (m != x && m != y) ++live;
        if (live == 0) return ec1_diff_odd_plain(w, x, y, std::move(stages), t0);
        return ec1_diff_odd(w, x, y, std::move(stages), t0);
    }
    if (!same_side) return ec1_diff_even(w, x, y, std::move(stages), t0);
    if (!h_odd) return ec1_same_even(w, x, y, std::move(stages), t0);

    // Same side with odd n/2: try the spare-neighbor route from either
    // terminal, then the borrowed-edge route from either terminal.
    SolveOutcome best;
    std::string detail;
    {
        SolveOutcome a = ec1_same_odd_spare(w, x, y, x, y, stages, t0);
        if (a.ok) return a;
        detail = "spare route: " + a.detail;
        SolveOutcome b = ec1_same_odd_spare(w, y, x, x, y, stages, t0);
        if (b.ok) return b;
        detail += "; mirrored spare route: " + b.detail;
        SolveOutcome c = ec1_same_odd_borrow(w, x, y, x, y, stages, t0);
        if (c.ok) return c;
        detail += "; borrowed route: " + c.detail;
        SolveOutcome d = ec1_same_odd_borrow(w, y, x, x, y, stages, t0);
        if (d.ok) return d;
        detail += "; mirrored borrowed route: " + d.detail;
        best = std::move(d);
    }
    best.detail = detail;
    best.stage = "connect";
    return best;
}

// ---------------------------------------------------------------------------
// Near-split solver.
// ---------------------------------------------------------------------------

namespace {

struct Ec2World {
    const Graph* g = nullptr;
    int n = 0;
    int h = 0;
    VertexSet u1, u2;
    std::vector<int> w1, w2;
    VertexSet mid1, mid2;
    std::uint64_t seed = 0;
};

SolveOutcome ec2_finish(const Ec2World& w, std::vector<int> order, int x, int y,
                        std::vector<StageNote> stages, Clock::time_point t0) {
    CycleCertificate cert;
    cert.order = std::move(order);
    cert.x = x;
    cert.y = y;
    cert.claimed_distance = w.h;
    const Verdict v = verify_certificate(*w.g, cert, w.h);
    push_stage(stages, "assemble", t0, v.ok ? "" : v.reason);
    if (!v.ok) return failure(std::move(stages), "verify", v.reason);
    SolveOutcome out;
    out.ok = true;
    out.cert = std::move(cert);
    out.stages = std::move(stages);
    return out;
}

// Same-side construction: xx, yy in u1, with cross anchors xx1, yy1 in u2.
// Builds the cycle or reports why it could not.
SolveOutcome ec2_same_side(const Ec2World& w, int xx, int yy, int xx1, int yy1, int certx,
                           int certy, std::vector<StageNote> stages, Clock::time_point t0) {
    const Graph& g = *w.g;
    const std::size_t n = (std::size_t)w.n;

    // Scan for a cross vertex u whose side-one neighborhood supports the
    // two-edge detour.
    std::string last_err = "no usable cross vertex";
    std::vector<std::pair<int, int>> single; // (u, its side-one neighbor)
    int dense_attempts = 0;
    for (std::size_t uv = w.u2.first(); uv < n; uv = w.u2.next(uv + 1)) {
        const int u = (int)uv;
        if (u == xx1 || u == yy1) continue;
        std::vector<int> su;
        const VertexSet& nb = g.neighbors(u);
        for (std::size_t c = nb.first(); c < n; c = nb.next(c + 1)) {
            if (!w.u1.test(c)) continue;
            if ((int)c == xx || (int)c == yy) continue;
            su.push_back((int)c);
            if (su.size() >= 8) break;
        }
        if (su.size() == 1) {
            single.push_back({u, su[0]});
            continue;
        }
        if (su.size() < 2) continue;
        // Prefer unprotected detour vertices.
        std::stable_sort(su.begin(), su.end(), [&](int a, int b) {
            const bool ma = w.mid1.test((std::size_t)a);
            const bool mb = w.mid1.test((std::size_t)b);
            if (ma != mb) return !ma;
            return a < b;
        });
        int tried = 0;
        for (std::size_t i = 0; i < su.size() && tried < 3 && dense_attempts < 6; ++i) {
            for (std::size_t j = 0; j < su.size() && tried < 3 && dense_attempts < 6; ++j) {
                if (i == j) continue;
                const int u2v = su[i]; // bridge target
                const int u1v = su[j]; // side-path start
                VertexSet allowed = w.u1;
                allowed.reset((std::size_t)yy);
                allowed.reset((std::size_t)u1v);
                allowed.subtract(w.mid1);
                allowed.set((std::size_t)xx);
                allowed.set((std::size_t)u2v);
                auto bridge = bfs_bridge(g, allowed, xx, u2v, 4);
                if (!bridge) continue;
                ++tried;
                ++dense_attempts;
                VertexSet ground2 = w.u1;
                ground2.subtract(VertexSet::of(n, *bridge));
                std::string err;
                auto p2 = ham_path_in_part(g, ground2, u1v, yy, w.w1,
                                           derive_seed(w.seed, "split-side-one", uv), err);
                if (!p2) {
                    last_err = err;
                    continue;
                }
                VertexSet ground3 = w.u2;
                ground3.reset((std::size_t)u);
                auto p3 = ham_path_in_part(g, ground3, xx1, yy1, w.w2,
                                           derive_seed(w.seed, "split-side-two", uv), err);
                if (!p3) {
                    last_err = err;
                    continue;
                }
                std::vector<int> order;
                order.reserve(n);
                order.push_back(xx1);
                append(order, *bridge); // xx ... u2v
                order.push_back(u);
                append(order, *p2);          // u1v ... yy
                append(order, rev(*p3), 0, 1); // yy1 ... (xx1 dropped)
                return ec2_finish(w, std::move(order), certx, certy, std::move(stages), t0);
            }
        }
    }

    // Single-neighbor detours: u adjacent to the first terminal directly.
    for (const auto& [u, u1v] : single) {
        if (!g.has_edge(u, xx)) continue;
        VertexSet ground2 = w.u1;
        ground2.reset((std::size_t)xx);
        std::string err;
        auto p2 = ham_path_in_part(g, ground2, u1v, yy, w.w1,
                                   derive_seed(w.seed, "split-side-one", (std::uint64_t)u), err);
        if (!p2) {
            last_err = err;
            continue;
        }
        VertexSet ground3 = w.u2;
        ground3.reset((std::size_t)u);
        auto p3 = ham_path_in_part(g, ground3, xx1, yy1, w.w2,
                                   derive_seed(w.seed, "split-side-two", (std::uint64_t)u), err);
        if (!p3) {
            last_err = err;
            continue;
        }
        std::vector<int> order;
        order.reserve(n);
        order.push_back(xx1);
        order.push_back(xx);
        order.push_back(u);
        append(order, *p2);            // u1v ... yy
        append(order, rev(*p3), 0, 1); // yy1 ... (xx1 dropped)
        return ec2_finish(w, std::move(order), certx, certy, std::move(stages), t0);
    }

    // Last resort: route the first terminal through the far side entirely.
    {
        VertexSet blocked(n);
        blocked.set((std::size_t)xx1);
        blocked.set((std::size_t)yy1);
        const int u = pick_nbr(g, xx, w.u2, blocked, &w.mid2);
        if (u < 0)
            return failure(std::move(stages), "connect",
                           last_err + "; and the terminal has no spare cross neighbor");
        VertexSet blocked1(n);
        blocked1.set((std::size_t)xx);
        blocked1.set((std::size_t)yy);
        const int v = pick_nbr(g, xx1, w.u1, blocked1, &w.mid1);
        if (v < 0)
            return failure(std::move(stages), "connect",
                           last_err + "; and the anchor has no side-one neighbor");
        VertexSet ground2 = w.u1;
        ground2.reset((std::size_t)xx);
        std::string err;
        auto p2 = ham_path_in_part(g, ground2, v, yy, w.w1,
                                   derive_seed(w.seed, "split-far-one", 0), err);
        if (!p2) return failure(std::move(stages), "side-path", last_err + "; " + err);
        VertexSet ground3 = w.u2;
        ground3.reset((std::size_t)xx1);
        auto p3 = ham_path_in_part(g, ground3, u, yy1, w.w2,
                                   derive_seed(w.seed, "split-far-two", 0), err);
        if (!p3) return failure(std::move(stages), "side-path", last_err + "; " + err);
        std::vector<int> order;
        order.reserve(n);
        order.push_back(v);
        order.push_back(xx1);
        order.push_back(xx);
        order.push_back(u);
        append(order, *p3, 1);         // ... yy1
        append(order, rev(*p2), 0, 1); // yy ... (v dropped)
        return ec2_finish(w, std::move(order), certx, certy, std::move(stages), t0);
    }
}

} // namespace

SolveOutcome solve_ec2(const Graph& g, int x, int y, const VertexSet& v1, const VertexSet& v2,
                       const Params& params, std::uint64_t seed) {
    check_partition_contract(g, x, y, v1, v2);
    const auto t0 = Clock::now();
    std::vector<StageNote> stages;

    ScaffoldOut sc = build_scaffold(g, v1, v2, params, /*cross_mode=*/false);
    if (!sc.s) {
        push_stage(stages, "scaffold", t0, sc.detail);
        return failure(std::move(stages), "scaffold", sc.detail);
    }
    push_stage(stages, "scaffold", t0, sc.s->note);

    Ec2World w;
    w.g = &g;
    w.n = g.n();
    w.h = g.n() / 2;
    w.u1 = sc.s->u1;
    w.u2 = sc.s->u2;
    w.w1 = sc.s->w1;
    w.w2 = sc.s->w2;
    w.seed = seed;
    if (!w.u1.test((std::size_t)x)) {
        std::swap(w.u1, w.u2);
        std::swap(w.w1, w.w2);
    }
    w.mid1 = VertexSet::of((std::size_t)w.n, w.w1);
    w.mid2 = VertexSet::of((std::size_t)w.n, w.w2);
    const bool same_side = w.u1.test((std::size_t)y);

    if (!same_side) {
        VertexSet bx((std::size_t)w.n);
        bx.set((std::size_t)y);
        const int x1 = pick_nbr(g, x, w.u2, bx, &w.mid2);
        VertexSet by((std::size_t)w.n);
        by.set((std::size_t)x);
        const int y1 = pick_nbr(g, y, w.u1, by, &w.mid1);
        if (x1 < 0 || y1 < 0)
            return failure(std::move(stages), "connect", "a terminal has no cross neighbor");
        std::string err;
        auto h1 = ham_path_in_part(g, w.u1, x, y1, w.w1, derive_seed(seed, "split-one", 0), err);
        if (!h1) return failure(std::move(stages), "side-path", err);
        auto h2 = ham_path_in_part(g, w.u2, y, x1, w.w2, derive_seed(seed, "split-two", 0), err);
        if (!h2) return failure(std::move(stages), "side-path", err);
        push_stage(stages, "side-path", t0, "");
        std::vector<int> order;
        order.reserve((std::size_t)w.n);
        append(order, *h1); // x ... y1
        append(order, *h2); // y ... x1, wraps to x
        return ec2_finish(w, std::move(order), x, y, std::move(stages), t0);
    }

    // Same side: pick distinct cross anchors for the two terminals.
    VertexSet b0((std::size_t)w.n);
    const int x1 = pick_nbr(g, x, w.u2, b0, &w.mid2);
    if (x1 >= 0) b0.set((std::size_t)x1);
    const int y1 = pick_nbr(g, y, w.u2, b0, &w.mid2);
    if (x1 < 0 || y1 < 0)
        return failure(std::move(stages), "connect",
                       "terminals lack two distinct cross neighbors");

    SolveOutcome first = ec2_same_side(w, x, y, x1, y1, x, y, stages, t0);
    if (first.ok) return first;
    SolveOutcome second = ec2_same_side(w, y, x, y1, x1, x, y, stages, t0);
    if (second.ok) return second;
    first.detail = "forward: " + first.detail + "; mirrored: " + second.detail;
    return first;
}

} // namespace hamlocate
