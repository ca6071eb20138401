#include "hamlocate/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamlocate {

int cycle_distance(const std::vector<int>& order, int x, int y) {
    auto ix = std::find(order.begin(), order.end(), x);
    auto iy = std::find(order.begin(), order.end(), y);
    if (ix == order.end() || iy == order.end())
        throw std::invalid_argument("cycle_distance: vertex not on cycle");
    int n = (int)order.size();
    int diff = (int)std::abs((long)(ix - order.begin()) - (long)(iy - order.begin()));
    return std::min(diff, n - diff);
}

Verdict verify_certificate(const Graph& g, const CycleCertificate& c, int target) {
    const int n = g.n();
    if ((int)c.order.size() != n)
        return {false, "order has " + std::to_string(c.order.size()) +
                           " entries, graph has " + std::to_string(n) + " vertices"};
    if (n < 3) return {false, "graph too small for a cycle"};
    std::vector<char> seen((std::size_t)n, 0);
    for (int v : c.order) {
        if (v < 0 || v >= n) return {false, "vertex id " + std::to_string(v) + " out of range"};
        if (seen[(std::size_t)v]) return {false, "vertex " + std::to_string(v) + " repeated"};
        seen[(std::size_t)v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        int u = c.order[(std::size_t)i];
        int v = c.order[(std::size_t)((i + 1) % n)];
        if (!g.has_edge(u, v))
            return {false, "pair " + std::to_string(u) + "-" + std::to_string(v) +
                               " is not an edge"};
    }
    if (c.x == c.y) return {false, "x and y coincide"};
    if (c.x < 0 || c.x >= n || c.y < 0 || c.y >= n)
        return {false, "x or y out of range"};
    int d = cycle_distance(c.order, c.x, c.y);
    if (d != c.claimed_distance)
        return {false, "claimed distance " + std::to_string(c.claimed_distance) +
                           " but measured " + std::to_string(d)};
    if (d != target)
        return {false, "measured distance " + std::to_string(d) + " differs from target " +
                           std::to_string(target)};
    return {true, ""};
}

Verdict verify_certificate(const Graph& g, const CycleCertificate& c) {
    return verify_certificate(g, c, c.claimed_distance);
}

} // namespace hamlocate
