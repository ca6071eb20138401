#include "hamlocate/embedder.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamlocate/regularity.hpp"
#include "hamlocate/rng.hpp"

namespace hamlocate {

namespace {

// Grows a path of exactly `len` vertices from `from` to `to`, drawing interior
// vertices from `ax` (the side of `from`) and `ay` (the side of `to`), both of
// which already exclude every prescribed endpoint. Used vertices are removed
// from the sets. Positions alternate sides starting on the side of `from`;
// `len` is even so the final slot lands on the side of `to`.
std::optional<std::vector<int>> build_path(const Graph& g, VertexSet& ax,
                                           VertexSet& ay, int from, int to,
                                           int len, Rng& rng) {
  const int n = g.n();
  const VertexSet& nbto = g.neighbors(to);

  std::vector<int> path;
  path.reserve(len);
  path.push_back(from);
  std::vector<int> pos(n, -1);
  pos[from] = 0;
  VertexSet on_path(n);
  on_path.set(from);

  std::int64_t budget = 16 * static_cast<std::int64_t>(len) + 400;
  std::vector<int> cands;
  std::vector<int> best;
  std::vector<int> pivots;

  while (static_cast<int>(path.size()) < len) {
    if (--budget < 0) return std::nullopt;
    const int s = static_cast<int>(path.size());
    const int end = path.back();

    if (s == len - 1) {
      // Only the prescribed endpoint remains.
      if (g.has_edge(end, to)) {
        path.push_back(to);
        pos[to] = s;
        return path;
      }
    } else {
      // Next position is s+1 (1-indexed), odd positions sit on from's side.
      const bool next_on_x = ((s + 1) % 2 == 1);
      VertexSet& side = next_on_x ? ax : ay;
      VertexSet& other = next_on_x ? ay : ax;
      const bool reserve = (s == len - 2);

      VertexSet cset = g.neighbors(end);
      cset &= side;
      if (reserve) cset &= nbto;
      cands = cset.to_vector();
      if (!cands.empty()) {
        int chosen;
        if (rng.chance(1, 4)) {
          chosen = cands[static_cast<std::size_t>(rng.below(cands.size()))];
        } else {
          int best_resid = -1;
          best.clear();
          for (int c : cands) {
            const int r = g.degree_into(c, other);
            if (r > best_resid) {
              best_resid = r;
              best.clear();
            }
            if (r == best_resid) best.push_back(c);
          }
          chosen = best[static_cast<std::size_t>(rng.below(best.size()))];
        }
        side.reset(chosen);
        pos[chosen] = static_cast<int>(path.size());
        on_path.set(chosen);
        path.push_back(chosen);
        continue;
      }
    }

    // Stuck: rotate. A pivot is a path neighbor of the end at index <= s-3;
    // reversing the suffix after it keeps the start, the vertex set, the
    // alternation, and the side of the end.
    pivots.clear();
    VertexSet pset = g.neighbors(end);
    pset &= on_path;
    const int e = static_cast<int>(path.size()) - 1;
    for (int u : pset.to_vector()) {
      const int i = pos[u];
      // The end vertex lands on position i+1 after the reversal, so the
      // pivot must sit at opposite parity (a cross edge, not an intra one).
      if (i <= e - 2 && (e - i) % 2 == 1) pivots.push_back(i);
    }
    if (pivots.empty()) return std::nullopt;
    const int i = pivots[static_cast<std::size_t>(rng.below(pivots.size()))];
    std::reverse(path.begin() + i + 1, path.end());
    for (int j = i + 1; j < static_cast<int>(path.size()); ++j) pos[path[j]] = j;
  }
  return path;
}

struct BuildSpec {
  int from, to, len;
};

}  // namespace

void validate_request(const Graph& g, const TwoPathRequest& req) {
  if (req.x_side.empty() || req.y_side.empty())
    throw std::invalid_argument("two-path request: empty side");
  if (req.x_side.intersects(req.y_side))
    throw std::invalid_argument("two-path request: sides overlap");
  const int nx = static_cast<int>(req.x_side.count());
  const int ny = static_cast<int>(req.y_side.count());
  if (nx != ny) throw std::invalid_argument("two-path request: unequal sides");
  const int cap = 2 * nx;
  if (req.l1 % 2 != 0 || req.l2 % 2 != 0)
    throw std::invalid_argument("two-path request: odd path length");
  if (req.l1 < 4 || req.l2 < 4 || req.l1 > cap - 4 || req.l2 > cap - 4)
    throw std::invalid_argument("two-path request: length out of bounds");
  if (req.l1 + req.l2 != cap)
    throw std::invalid_argument("two-path request: lengths do not cover the pair");
  for (int v : {req.x1, req.x2, req.y1, req.y2})
    if (v < 0 || v >= g.n())
      throw std::invalid_argument("two-path request: endpoint out of range");
  if (!req.x_side.test(req.x1) || !req.x_side.test(req.x2))
    throw std::invalid_argument("two-path request: x endpoint off its side");
  if (!req.y_side.test(req.y1) || !req.y_side.test(req.y2))
    throw std::invalid_argument("two-path request: y endpoint off its side");
  if (req.x1 == req.x2 || req.y1 == req.y2)
    throw std::invalid_argument("two-path request: coincident endpoints");
}

EmbedResult embed_two_paths(const Graph& g, const TwoPathRequest& req,
                            const Ratio& eps, const Ratio& delta,
                            std::uint64_t seed, int restarts) {
  validate_request(g, req);
  EmbedResult out;

  const int nx = static_cast<int>(req.x_side.count());
  const RegMode mode = nx <= 16 ? RegMode::Exhaustive : RegMode::Sampled;
  const bool pre =
      is_super_regular(g, req.x_side, req.y_side, eps, delta, mode, 60,
                       derive_seed(seed, "embed-pre", 0));
  if (!pre) {
    out.error = "precondition failed: pair is not super-regular at the requested quality";
    return out;
  }

  const BuildSpec spec1{req.x1, req.y1, req.l1};
  const BuildSpec spec2{req.x2, req.y2, req.l2};
  const bool one_first = req.l1 <= req.l2;
  const bool near_bounds = std::min(req.l1, req.l2) <= 6;

  const int rounds = near_bounds ? 2 : 1;
  for (int round = 0; round < rounds; ++round) {
    const BuildSpec& first = (one_first == (round == 0)) ? spec1 : spec2;
    const BuildSpec& second = (one_first == (round == 0)) ? spec2 : spec1;
    for (int attempt = 0; attempt < restarts; ++attempt) {
      Rng rng(derive_seed(seed, "embed-attempt",
                          (static_cast<std::uint64_t>(round) << 32) |
                              static_cast<std::uint64_t>(attempt)));
      VertexSet ax = req.x_side;
      ax.reset(req.x1);
      ax.reset(req.x2);
      VertexSet ay = req.y_side;
      ay.reset(req.y1);
      ay.reset(req.y2);

      auto pa = build_path(g, ax, ay, first.from, first.to, first.len, rng);
      if (!pa) continue;
      auto pb = build_path(g, ax, ay, second.from, second.to, second.len, rng);
      if (!pb) continue;
      if (!ax.empty() || !ay.empty()) continue;

      out.p1 = (first.from == req.x1) ? *pa : *pb;
      out.p2 = (first.from == req.x1) ? *pb : *pa;
      const Verdict v = check_two_paths(g, req, out.p1, out.p2);
      if (!v.ok)
        throw std::logic_error("embedding verifier rejected a produced pair: " +
                               v.reason);
      out.ok = true;
      return out;
    }
  }
  out.error = "embedding failed after exhausting the restart budget";
  return out;
}

Verdict check_two_paths(const Graph& g, const TwoPathRequest& req,
                        const std::vector<int>& p1, const std::vector<int>& p2) {
  if (static_cast<int>(p1.size()) != req.l1)
    return {false, "path 1 has the wrong number of vertices"};
  if (static_cast<int>(p2.size()) != req.l2)
    return {false, "path 2 has the wrong number of vertices"};
  if (p1.front() != req.x1 || p1.back() != req.y1)
    return {false, "path 1 endpoints do not match the request"};
  if (p2.front() != req.x2 || p2.back() != req.y2)
    return {false, "path 2 endpoints do not match the request"};

  VertexSet seen(g.n());
  for (const std::vector<int>* p : {&p1, &p2}) {
    for (int v : *p) {
      if (v < 0 || v >= g.n()) return {false, "vertex out of range"};
      if (!req.x_side.test(v) && !req.y_side.test(v))
        return {false, "vertex outside the pair"};
      if (seen.test(v)) return {false, "vertex used twice"};
      seen.set(v);
    }
    for (std::size_t i = 0; i + 1 < p->size(); ++i) {
      const int a = (*p)[i];
      const int b = (*p)[i + 1];
      if (!g.has_edge(a, b)) return {false, "missing edge along a path"};
      const bool ax = req.x_side.test(a);
      const bool bx = req.x_side.test(b);
      if (ax == bx) return {false, "path does not alternate sides"};
    }
  }
  const std::size_t total = req.x_side.count() + req.y_side.count();
  if (seen.count() != total) return {false, "paths do not span the pair"};
  return {true, ""};
}

namespace {

bool cluster_open(const VertexSet& cluster, int usage, const Ratio& cap) {
  const __int128 lhs = static_cast<__int128>(usage + 1) * cap.den;
  const __int128 rhs = static_cast<__int128>(cap.num) * cluster.count();
  return lhs <= rhs;
}

}  // namespace

std::optional<Chain> find_chain(const ChainWorld& world, int u, int v,
                                std::vector<int>& usage_x,
                                std::vector<int>& usage_y) {
  const Graph& g = *world.g;
  const int k = static_cast<int>(world.pairs.size());

  // Length 2: one partner pair serves both endpoints.
  for (int i = 0; i < k; ++i) {
    const auto& [xi, yi] = world.pairs[i];
    if (!cluster_open(xi, usage_x[i], world.cap)) continue;
    if (!cluster_open(yi, usage_y[i], world.cap)) continue;
    if (!friendly(g, u, xi, world.thr_num, world.thr_den)) continue;
    if (!friendly(g, v, yi, world.thr_num, world.thr_den)) continue;
    ++usage_x[i];
    ++usage_y[i];
    return Chain{u, v, {i}};
  }

  // Length 4: two partner pairs joined by a regular link (Y_i, X_j).
  for (int i = 0; i < k; ++i) {
    const auto& [xi, yi] = world.pairs[i];
    if (!cluster_open(xi, usage_x[i], world.cap)) continue;
    if (!cluster_open(yi, usage_y[i], world.cap)) continue;
    if (!friendly(g, u, xi, world.thr_num, world.thr_den)) continue;
    for (int j = 0; j < k; ++j) {
      if (j == i || !world.linked[i][j]) continue;
      const auto& [xj, yj] = world.pairs[j];
      if (!cluster_open(xj, usage_x[j], world.cap)) continue;
      if (!cluster_open(yj, usage_y[j], world.cap)) continue;
      if (!friendly(g, v, yj, world.thr_num, world.thr_den)) continue;
      ++usage_x[i];
      ++usage_y[i];
      ++usage_x[j];
      ++usage_y[j];
      return Chain{u, v, {i, j}};
    }
  }
  return std::nullopt;
}

}  // namespace hamlocate
