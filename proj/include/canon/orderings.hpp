#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "canon/ice.hpp"
#include "canon/plane_graph.hpp"

namespace canon {

using Ordering = std::vector<VertexId>;

struct Verdict {
    bool ok = true;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// Every linear extension of d, available sources taken in increasing id order.
// Throws GraphError if d has a directed cycle.
std::uint64_t topological_sortings(const MaximalPlaneGraph &g, const CanonicalOrientation &d,
                                   const std::function<bool(std::span<const VertexId>)> &visit);

// Throws GraphError if seq is not a permutation of the vertices.
Verdict is_canonical_ordering(const MaximalPlaneGraph &g, std::span<const VertexId> seq);

// Orients (v_i, v_j) from v_i to v_j iff i < j.
CanonicalOrientation orientation_of(const MaximalPlaneGraph &g, std::span<const VertexId> seq);

} // namespace canon
