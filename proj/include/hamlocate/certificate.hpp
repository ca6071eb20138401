#pragma once

#include <string>
#include <vector>

#include "hamlocate/graph.hpp"

namespace hamlocate {

// Output contract of every solver: the cycle as a vertex order, the two
// distinguished vertices, and the distance the producer claims.
struct CycleCertificate {
    std::vector<int> order; // cyclic order, order[0] adjacent to order[n-1]
    int x = -1;
    int y = -1;
    int claimed_distance = 0;
};

struct Verdict {
    bool ok = false;
    std::string reason; // empty iff ok
};

// Distance between x and y along the cycle given by `order` (min of the two
// arc lengths). Throws if either vertex is missing from the order.
int cycle_distance(const std::vector<int>& order, int x, int y);

// Full independent check: permutation of 0..n-1, every consecutive pair (and
// the wrap-around) is an edge of g, x != y both present, the certificate's
// claimed_distance matches the order, and the measured distance equals target.
Verdict verify_certificate(const Graph& g, const CycleCertificate& c, int target);

// Convenience: target = the certificate's own claim.
Verdict verify_certificate(const Graph& g, const CycleCertificate& c);

} // namespace hamlocate
