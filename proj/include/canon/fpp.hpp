#pragma once

#include <span>

#include "canon/geometry.hpp"
#include "canon/ice.hpp"
#include "canon/plane_graph.hpp"

namespace canon {

// Shift method with relative x-offsets, linear time. Throws GraphError on an invalid ordering.
GridDrawing fpp_draw(const MaximalPlaneGraph &g, std::span<const VertexId> order);

// Same construction with explicit shift sets; quadratic. Checks the contour slope and
// set nesting invariants after every insertion and throws std::logic_error if one fails.
GridDrawing fpp_draw_reference(const MaximalPlaneGraph &g, std::span<const VertexId> order);
// Stops after the first k_max vertices are placed; later vertices stay at (0, 0).
GridDrawing fpp_draw_reference(const MaximalPlaneGraph &g, std::span<const VertexId> order, int k_max);

// fpp_draw on one topological sorting of d (all sortings give the same drawing).
GridDrawing canonical_drawing(const MaximalPlaneGraph &g, const CanonicalOrientation &d);

} // namespace canon
