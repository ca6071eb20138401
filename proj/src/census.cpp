#include "hamlocate/census.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "hamlocate/canonical.hpp"
#include "hamlocate/generators.hpp"
#include "hamlocate/io.hpp"
#include "hamlocate/rng.hpp"

namespace hamlocate {

namespace {

const char* outcome_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        default: return "exhausted";
    }
}

SearchStatus outcome_from_name(const std::string& s) {
    if (s == "found") return SearchStatus::Found;
    if (s == "absent") return SearchStatus::Absent;
    if (s == "exhausted") return SearchStatus::Exhausted;
    throw std::invalid_argument("census record: bad outcome " + s);
}

// All labeled graphs on n vertices with min degree >= bound, enumerated as
// complements: DFS over complement edge slots with max complement degree
// n-1-bound. Feasible only while the complement stays sparse.
void labeled_complement_dfs(int n, int cap, std::vector<std::pair<int, int>>& slots,
                            std::size_t s, std::vector<int>& cdeg,
                            std::vector<std::pair<int, int>>& chosen,
                            const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (s == slots.size()) {
        emit(chosen);
        return;
    }
    auto [u, v] = slots[s];
    // skip this complement edge
    labeled_complement_dfs(n, cap, slots, s + 1, cdeg, chosen, emit);
    // take it if caps allow
    if (cdeg[(std::size_t)u] < cap && cdeg[(std::size_t)v] < cap) {
        ++cdeg[(std::size_t)u];
        ++cdeg[(std::size_t)v];
        chosen.push_back(slots[s]);
        labeled_complement_dfs(n, cap, slots, s + 1, cdeg, chosen, emit);
        chosen.pop_back();
        --cdeg[(std::size_t)u];
        --cdeg[(std::size_t)v];
    }
}

Graph graph_from_complement_edges(int n, const std::vector<std::pair<int, int>>& cedges) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    for (auto [u, v] : cedges) b.remove_edge(u, v);
    return b.build();
}

} // namespace

std::vector<Graph> enumerate_min_degree_labeled(int n, int min_degree) {
    int cap = n - 1 - min_degree;
    if (cap < 0) return {};
    if (n > 12) throw std::invalid_argument("labeled enumeration infeasible beyond n=12");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<int> cdeg((std::size_t)n, 0);
    std::vector<std::pair<int, int>> chosen;
    std::vector<Graph> out;
    labeled_complement_dfs(n, cap, slots, 0, cdeg, chosen,
                           [&](const std::vector<std::pair<int, int>>& ce) {
                               out.push_back(graph_from_complement_edges(n, ce));
                           });
    return out;
}

std::vector<Graph> enumerate_min_degree_canonical(int n, int min_degree) {
    int cap = n - 1 - min_degree;
    if (cap < 0) return {};
    if (n > 16) throw std::invalid_argument("canonical enumeration infeasible beyond n=16");
    // BFS over complement-side canonical classes by edge count. Every graph
    // with k+1 edges and max degree <= cap arises from one with k edges by
    // removing any edge, so level-wise extension with canonical dedup visits
    // each class exactly once.
    std::vector<Graph> reps;                      // complement-side canonical reps
    std::vector<Graph> level{Graph::from_edge_list(n, {})};
    std::set<std::string> seen{canonical_g6(level[0])};
    reps.push_back(level[0]);
    long long max_edges = (long long)cap * n / 2;
    for (long long k = 0; k < max_edges && !level.empty(); ++k) {
        std::vector<Graph> next;
        for (const Graph& c : level) {
            for (int u = 0; u < n; ++u) {
                if (c.degree(u) >= cap) continue;
                for (int v = u + 1; v < n; ++v) {
                    if (c.degree(v) >= cap || c.has_edge(u, v)) continue;
                    GraphBuilder b(n);
                    for (auto [a, bb] : c.edges()) b.add_edge(a, bb);
                    b.add_edge(u, v);
                    Graph c2 = b.build();
                    Graph canon = relabel(c2, canonical_order(c2));
                    std::string key = to_graph6(canon);
                    if (seen.insert(key).second) {
                        next.push_back(canon);
                        reps.push_back(canon);
                    }
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (const Graph& c : reps) out.push_back(complement_graph(c));
    return out;
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("HAMLOCATE_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

std::string census_record_to_json(const CensusRecord& r) {
    nlohmann::json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["x"] = r.x;
    j["y"] = r.y;
    j["outcome"] = outcome_name(r.outcome);
    j["nodes"] = r.nodes;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

CensusRecord census_record_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    CensusRecord r;
    r.graph_id = j.at("graph_id").get<std::string>();
    r.n = j.at("n").get<int>();
    r.x = j.at("x").get<int>();
    r.y = j.at("y").get<int>();
    r.outcome = outcome_from_name(j.at("outcome").get<std::string>());
    r.nodes = j.at("nodes").get<std::int64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

CensusResult run_census(const CensusOptions& opt) {
    const int n = opt.n;
    if (n < 3) throw std::invalid_argument("census: n too small");
    const int min_degree = opt.min_degree >= 0 ? opt.min_degree : dirac_plus_one(n);
    const int target = opt.target_distance >= 0 ? opt.target_distance : n / 2;
    if (target < 1 || target > n / 2) throw std::invalid_argument("census: bad target distance");

    std::vector<Graph> graphs;
    switch (opt.mode) {
        case EnumMode::AllLabeled:
            graphs = enumerate_min_degree_labeled(n, min_degree);
            break;
        case EnumMode::Canonical:
            graphs = enumerate_min_degree_canonical(n, min_degree);
            break;
        case EnumMode::Catalog: {
            std::istringstream in(read_text_file(opt.catalog_path));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                Graph g = from_graph6(line);
                if (g.n() != n)
                    throw std::invalid_argument("catalog graph order mismatch");
                if (g.min_degree() >= min_degree) graphs.push_back(g);
            }
            break;
        }
    }

    // Resume: records already on disk count as done, keyed by graph_id.
    std::map<std::string, std::vector<CensusRecord>> done;
    if (opt.resume && !opt.output_path.empty() &&
        std::filesystem::exists(opt.output_path)) {
        std::istringstream in(read_text_file(opt.output_path));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            CensusRecord r = census_record_from_json(line);
            done[r.graph_id].push_back(r);
        }
    }

    // Pair list per graph.
    auto pairs_for = [&](const Graph& g, std::uint64_t instance) {
        std::vector<std::pair<int, int>> ps;
        if (opt.pair_policy == PairPolicy::AllPairs) {
            for (int x = 0; x < g.n(); ++x)
                for (int y = x + 1; y < g.n(); ++y) ps.emplace_back(x, y);
        } else {
            Rng rng(derive_seed(opt.seed, "census-pairs", instance));
            std::set<std::pair<int, int>> chosen;
            int want = std::min<int>(opt.sample_pairs, g.n() * (g.n() - 1) / 2);
            while ((int)chosen.size() < want) {
                int x = rng.range(0, g.n() - 1);
                int y = rng.range(0, g.n() - 1);
                if (x == y) continue;
                if (x > y) std::swap(x, y);
                chosen.insert({x, y});
            }
            ps.assign(chosen.begin(), chosen.end());
        }
        return ps;
    };

    CensusResult result;
    result.graphs = (std::int64_t)graphs.size();
    std::mutex sink_mutex;
    std::ofstream sink;
    if (!opt.output_path.empty())
        sink.open(opt.output_path, opt.resume ? std::ios::app : std::ios::trunc);

    std::atomic<std::size_t> next_index{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    int workers = worker_count(opt.threads);
    auto work = [&]() {
        while (!aborted.load()) {
            std::size_t i = next_index.fetch_add(1);
            if (i >= graphs.size()) break;
            try {
                const Graph& g = graphs[i];
                std::string gid = to_graph6(g);
                std::vector<CensusRecord> recs;
                auto it = done.find(gid);
                if (it != done.end()) {
                    recs = it->second;
                } else {
                    for (auto [x, y] : pairs_for(g, (std::uint64_t)i)) {
                        SearchResult sr = find_cycle_with_distance(g, x, y, target, opt.budget);
                        if (sr.status == SearchStatus::Found) {
                            Verdict v = verify_certificate(g, *sr.certificate, target);
                            if (!v.ok)
                                throw std::logic_error(
                                    "census: solver soundness violation: " + v.reason);
                        }
                        recs.push_back({gid, n, x, y, sr.status, sr.nodes, sr.elapsed_ms});
                    }
                }
                std::lock_guard<std::mutex> lock(sink_mutex);
                bool fresh = it == done.end();
                for (const CensusRecord& r : recs) {
                    ++result.pairs;
                    switch (r.outcome) {
                        case SearchStatus::Found: ++result.found; break;
                        case SearchStatus::Absent: ++result.absent; break;
                        case SearchStatus::Exhausted: ++result.exhausted; break;
                    }
                    if (r.outcome != SearchStatus::Found) result.failures.push_back(r);
                    if (opt.keep_records) result.records.push_back(r);
                    if (sink.is_open() && fresh) sink << census_record_to_json(r) << "\n";
                }
                if (sink.is_open() && fresh) sink.flush(); // whole graph lands atomically
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                aborted.store(true);
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return result;
}

} // namespace hamlocate
