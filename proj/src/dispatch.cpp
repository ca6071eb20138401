#include "hamlocate/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hamlocate/generators.hpp"
#include "hamlocate/oracle.hpp"
#include "hamlocate/rng.hpp"

namespace hamlocate {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Merges one solver attempt's stage log into the report, tagged by solver.
void merge_stages(SolveReport& rep, const std::string& name,
                  const std::vector<StageNote>& notes) {
    for (const StageNote& s : notes)
        rep.stages.push_back(StageNote{name + ":" + s.stage, s.ms, s.note});
}

// Split-and-stitch fallback: spend the whole budget on random balanced halves
// and one dense spanning path per half.
SolveOutcome solve_direct(const Graph& g, int x, int y, std::uint64_t seed) {
    const auto t0 = Clock::now();
    const int n = g.n();
    const int h = n / 2;
    SolveOutcome out;
    std::vector<int> others;
    others.reserve((std::size_t)n - 2);
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) others.push_back(v);
    std::string last = "no attempt ran";
    for (int attempt = 0; attempt < 30; ++attempt) {
        Rng rng(derive_seed(seed, "direct", (std::uint64_t)attempt));
        rng.shuffle(others);
        std::vector<int> half(others.begin(), others.begin() + (h - 1));
        half.push_back(x);
        half.push_back(y);
        VertexSet sub1 = VertexSet::of((std::size_t)n, half);
        auto p1 = hamiltonian_path_dense(g, sub1, x, y,
                                         derive_seed(seed, "direct-a", (std::uint64_t)attempt), 5);
        if (!p1) {
            last = "no spanning path through the first half";
            continue;
        }
        std::vector<int> rest(others.begin() + (h - 1), others.end());
        rest.push_back(x);
        rest.push_back(y);
        VertexSet sub2 = VertexSet::of((std::size_t)n, rest);
        auto p2 = hamiltonian_path_dense(g, sub2, y, x,
                                         derive_seed(seed, "direct-b", (std::uint64_t)attempt), 5);
        if (!p2) {
            last = "no spanning path through the second half";
            continue;
        }
        std::vector<int> order = *p1;
        order.insert(order.end(), p2->begin() + 1, p2->end() - 1);
        CycleCertificate cert;
        cert.order = std::move(order);
        cert.x = x;
        cert.y = y;
        cert.claimed_distance = h;
        const Verdict v = verify_certificate(g, cert, h);
        if (!v.ok) {
            last = v.reason;
            continue;
        }
        out.ok = true;
        out.cert = std::move(cert);
        out.stages.push_back(
            StageNote{"stitch", elapsed_ms(t0), "attempt " + std::to_string(attempt)});
        return out;
    }
    out.ok = false;
    out.stage = "stitch";
    out.detail = last;
    out.stages.push_back(StageNote{"stitch", elapsed_ms(t0), "30 attempts failed"});
    return out;
}

SolveReport rejected(SolveReport rep, std::string why, Clock::time_point t0) {
    rep.success = false;
    rep.failure = "rejected: " + std::move(why);
    rep.total_ms = elapsed_ms(t0);
    return rep;
}

} // namespace

std::optional<std::vector<int>> reinsert_vertex(const Graph& g, const std::vector<int>& cycle,
                                                int v, int x, int y) {
    const int len = (int)cycle.size();
    if (len < 3) return std::nullopt;
    int px = -1, py = -1;
    for (int i = 0; i < len; ++i) {
        if (cycle[(std::size_t)i] == x) px = i;
        if (cycle[(std::size_t)i] == y) py = i;
    }
    if (px < 0 || py < 0) return std::nullopt;
    const int forward = (py - px + len) % len; // edges on the arc px -> py
    // Edge i sits between positions i and i+1 (mod len). It lies on the
    // forward arc exactly when its offset from px is below `forward`.
    auto on_forward = [&](int i) { return (i - px + len) % len < forward; };
    const bool long_is_forward = forward >= len - forward;
    for (int pass = 0; pass < 2; ++pass) {
        const bool want_forward = (pass == 0) ? long_is_forward : !long_is_forward;
        for (int i = 0; i < len; ++i) {
            if (on_forward(i) != want_forward) continue;
            const int a = cycle[(std::size_t)i];
            const int b = cycle[(std::size_t)((i + 1) % len)];
            if (!g.has_edge(a, v) || !g.has_edge(b, v)) continue;
            std::vector<int> out = cycle;
            out.insert(out.begin() + (std::ptrdiff_t)i + 1, v);
            return out;
        }
    }
    return std::nullopt;
}

SolveReport reduce_odd(const Graph& g, int x, int y, const DispatchConfig& cfg) {
    const auto t0 = Clock::now();
    const int n = g.n();
    if (n % 2 == 0) throw std::invalid_argument("reduce_odd requires odd order");
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw std::invalid_argument("invalid terminal pair");

    SolveReport rep;
    rep.n = n;
    rep.x = x;
    rep.y = y;
    rep.target = n / 2;
    rep.seed = cfg.seed;

    // Delete the highest-id vertex outside {x, y}; ids above it shift down.
    int v = n - 1;
    while (v == x || v == y) --v;
    GraphBuilder b(n - 1);
    for (const auto& [a, c] : g.edges()) {
        if (a == v || c == v) continue;
        b.add_edge(a - (a > v ? 1 : 0), c - (c > v ? 1 : 0));
    }
    const Graph sub = b.build();
    const int xs = x - (x > v ? 1 : 0);
    const int ys = y - (y > v ? 1 : 0);

    rep.stages.push_back(StageNote{"reduce-odd", elapsed_ms(t0),
                                   "deleted vertex " + std::to_string(v)});
    SolveReport inner = dispatch(sub, xs, ys, cfg);
    rep.classify_label = inner.classify_label;
    for (const StageNote& s : inner.stages) rep.stages.push_back(s);
    if (!inner.success || !inner.certificate) {
        rep.failure = inner.failure.empty() ? "even-order subproblem failed" : inner.failure;
        rep.method = inner.method;
        rep.total_ms = elapsed_ms(t0);
        return rep;
    }

    std::vector<int> mapped = inner.certificate->order;
    for (int& w : mapped) w += (w >= v) ? 1 : 0;
    auto widened = reinsert_vertex(g, mapped, v, x, y);
    if (!widened) {
        rep.failure = "no reinsertion slot for vertex " + std::to_string(v);
        rep.method = inner.method;
        rep.total_ms = elapsed_ms(t0);
        return rep;
    }
    CycleCertificate cert;
    cert.order = std::move(*widened);
    cert.x = x;
    cert.y = y;
    cert.claimed_distance = n / 2;
    const Verdict verdict = verify_certificate(g, cert, n / 2);
    rep.stages.push_back(StageNote{"reinsert", elapsed_ms(t0),
                                   verdict.ok ? "" : verdict.reason});
    if (!verdict.ok) {
        rep.failure = "reinserted cycle failed verification: " + verdict.reason;
        rep.method = inner.method;
        rep.total_ms = elapsed_ms(t0);
        return rep;
    }
    rep.success = true;
    rep.verified = true;
    rep.method = "reduce-odd(" + inner.method + ")";
    rep.certificate = std::move(cert);
    rep.total_ms = elapsed_ms(t0);
    return rep;
}

SolveReport dispatch(const Graph& g, int x, int y, const DispatchConfig& cfg) {
    const auto t0 = Clock::now();
    const int n = g.n();
    SolveReport rep;
    rep.n = n;
    rep.x = x;
    rep.y = y;
    rep.target = n / 2;
    rep.seed = cfg.seed;

    if (n < 3) return rejected(std::move(rep), "order below 3", t0);
    if (x < 0 || y < 0 || x >= n || y >= n)
        return rejected(std::move(rep), "terminal out of range", t0);
    if (x == y) return rejected(std::move(rep), "terminals coincide", t0);
    const int bound = dirac_plus_one(n);
    if (g.min_degree() < bound)
        return rejected(std::move(rep),
                        "minimum degree " + std::to_string(g.min_degree()) +
                            " below the guarantee bound " + std::to_string(bound),
                        t0);

    // Small orders: the exhaustive search is both fast and complete.
    if (n <= cfg.small_cutoff) {
        const SearchResult sr = find_cycle_with_distance(g, x, y, rep.target);
        rep.stages.push_back(StageNote{"oracle", elapsed_ms(t0),
                                       std::to_string(sr.nodes) + " nodes"});
        if (sr.status == SearchStatus::Found && sr.certificate) {
            const Verdict v = verify_certificate(g, *sr.certificate, rep.target);
            if (v.ok) {
                rep.success = true;
                rep.verified = true;
                rep.method = "oracle";
                rep.certificate = sr.certificate;
                rep.total_ms = elapsed_ms(t0);
                return rep;
            }
            rep.failure = "exhaustive search returned an invalid certificate: " + v.reason;
        } else if (sr.status == SearchStatus::Absent) {
            rep.failure = "no such cycle exists (exhaustive search)";
        } else {
            rep.failure = "exhaustive search budget exhausted";
        }
        rep.total_ms = elapsed_ms(t0);
        return rep;
    }

    if (n % 2 == 1) {
        SolveReport odd = reduce_odd(g, x, y, cfg);
        odd.total_ms = elapsed_ms(t0);
        return odd;
    }

    // Even orders: classify, then run the constructive solvers most likely to
    // apply first. Every outcome is re-verified here before being trusted.
    const ClassifyResult cls =
        classify(g, cfg.classify_alpha, cfg.classify_effort, derive_seed(cfg.seed, "classify", 0));
    rep.classify_label = to_string(cls.verdict);

    std::vector<std::string> order;
    if (cls.verdict == ExtremalKind::EC1)
        order = {"ec1", "ec2", "nonextremal"};
    else if (cls.verdict == ExtremalKind::EC2)
        order = {"ec2", "ec1", "nonextremal"};
    else
        order = {"nonextremal", "ec1", "ec2"};

    std::string last_failure;
    for (const std::string& name : order) {
        SolveOutcome out;
        try {
            if (name == "nonextremal") {
                out = solve_nonextremal(g, x, y, cfg.params,
                                        derive_seed(cfg.seed, "nonextremal", 0));
            } else if (name == "ec1") {
                out = solve_ec1(g, x, y, cls.maxcut_a, cls.maxcut_b, cfg.params,
                                derive_seed(cfg.seed, "ec1", 0));
            } else {
                out = solve_ec2(g, x, y, cls.mincut_a, cls.mincut_b, cfg.params,
                                derive_seed(cfg.seed, "ec2", 0));
            }
        } catch (const std::exception& e) {
            out.ok = false;
            out.stage = "precondition";
            out.detail = e.what();
        }
        merge_stages(rep, name, out.stages);
        if (out.ok) {
            const Verdict v = verify_certificate(g, out.cert, rep.target);
            if (v.ok) {
                rep.success = true;
                rep.verified = true;
                rep.method = name;
                rep.certificate = std::move(out.cert);
                rep.total_ms = elapsed_ms(t0);
                return rep;
            }
            last_failure = name + " produced an invalid certificate: " + v.reason;
            continue;
        }
        last_failure = name + " failed at " + out.stage + ": " + out.detail;
    }

    if (cfg.allow_direct) {
        SolveOutcome out = solve_direct(g, x, y, derive_seed(cfg.seed, "direct", 0));
        merge_stages(rep, "direct", out.stages);
        if (out.ok) {
            const Verdict v = verify_certificate(g, out.cert, rep.target);
            if (v.ok) {
                rep.success = true;
                rep.verified = true;
                rep.method = "direct";
                rep.certificate = std::move(out.cert);
                rep.total_ms = elapsed_ms(t0);
                return rep;
            }
            last_failure = "direct produced an invalid certificate: " + v.reason;
        } else {
            last_failure = "direct failed: " + out.detail;
        }
    }

    if (n <= cfg.oracle_max) {
        const SearchResult sr = find_cycle_with_distance(g, x, y, rep.target);
        rep.stages.push_back(StageNote{"oracle", elapsed_ms(t0),
                                       std::to_string(sr.nodes) + " nodes"});
        if (sr.status == SearchStatus::Found && sr.certificate) {
            const Verdict v = verify_certificate(g, *sr.certificate, rep.target);
            if (v.ok) {
                rep.success = true;
                rep.verified = true;
                rep.method = "oracle";
                rep.certificate = sr.certificate;
                rep.total_ms = elapsed_ms(t0);
                return rep;
            }
        } else if (sr.status == SearchStatus::Absent) {
            last_failure = "no such cycle exists (exhaustive search)";
        }
    }

    rep.failure = last_failure.empty() ? "all solvers failed" : last_failure;
    rep.total_ms = elapsed_ms(t0);
    return rep;
}

std::string report_to_json(const SolveReport& r) {
    nlohmann::json j;
    j["success"] = r.success;
    j["method"] = r.method;
    j["classify"] = r.classify_label;
    j["n"] = r.n;
    j["x"] = r.x;
    j["y"] = r.y;
    j["target"] = r.target;
    j["verified"] = r.verified;
    j["seed"] = r.seed;
    j["total_ms"] = r.total_ms;
    nlohmann::json stages = nlohmann::json::array();
    for (const StageNote& s : r.stages)
        stages.push_back({{"stage", s.stage}, {"ms", s.ms}, {"note", s.note}});
    j["stages"] = stages;
    if (r.certificate) {
        j["certificate"] = {{"order", r.certificate->order},
                            {"x", r.certificate->x},
                            {"y", r.certificate->y},
                            {"claimed_distance", r.certificate->claimed_distance}};
    } else {
        j["certificate"] = nullptr;
    }
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j.dump();
}

} // namespace hamlocate
