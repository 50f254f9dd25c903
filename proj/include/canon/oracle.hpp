#pragma once

#include <set>

#include "canon/geometry.hpp"
#include "canon/ice.hpp"
#include "canon/orderings.hpp"
#include "canon/plane_graph.hpp"

namespace canon {

// Deduplicated, ordered by (outer, bit vector).
using OrientationSet = std::set<CanonicalOrientation>;
using OrderingSet = std::set<Ordering>;

inline constexpr int kMaxBruteForceEdges = 24;
inline constexpr int kMaxBruteForceVertices = 8;

// Acyclic, u the only source, z the only sink, every internal vertex with indegree >= 2.
Verdict is_canonical_orientation(const MaximalPlaneGraph &g, const CanonicalOrientation &d);

// Filters all 2^m assignments. Throws SizeGuardError when m > 24.
OrientationSet brute_force_orientations(const MaximalPlaneGraph &g);
OrientationSet brute_force_orientations_serial(const MaximalPlaneGraph &g);

// Filters all permutations starting with u. Throws SizeGuardError when n > 8.
OrderingSet brute_force_orderings(const MaximalPlaneGraph &g);

// Exact test over all edge pairs. Edges may meet only at a shared endpoint.
Verdict check_planar_straightline(const MaximalPlaneGraph &g, const GridDrawing &p);
Verdict check_planar_straightline_serial(const MaximalPlaneGraph &g, const GridDrawing &p);

} // namespace canon
