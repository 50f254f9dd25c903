#pragma once

#include <array>
#include <vector>

#include "canon/geometry.hpp"
#include "canon/ice.hpp"
#include "canon/orderings.hpp"
#include "canon/plane_graph.hpp"

namespace canon {

// color 0 marks an outer edge; internal edges carry 1, 2 or 3.
struct WoodEdge {
    int color = 0;
    bool a_to_b = false;
    auto operator<=>(const WoodEdge &) const = default;
};

// Indexed by edge id. The roots u1, u2, u3 are outer[0], outer[1], outer[2].
struct SchnyderWood {
    Triple outer{};
    std::vector<WoodEdge> edges;
    auto operator<=>(const SchnyderWood &) const = default;
};

// Throws GraphError if d is not a canonical orientation of g.
SchnyderWood wood_from_orientation(const MaximalPlaneGraph &g, const CanonicalOrientation &d);

// Local sector rule, root rule and acyclicity of each color class.
// Throws GraphError if some internal edge has no color or the size is wrong.
Verdict validate_wood(const MaximalPlaneGraph &g, const SchnyderWood &wd);

// Path in color class i+1 from w to its root, for i = 0, 1, 2. Throws GraphError if w is
// an outer vertex or a color class has a cycle.
std::array<std::vector<VertexId>, 3> tree_paths(const MaximalPlaneGraph &g, const SchnyderWood &wd, VertexId w);

// Internal faces in the regions opposite u1, u2, u3 cut out by the three tree paths of w.
std::array<int, 3> region_face_counts(const MaximalPlaneGraph &g, const SchnyderWood &wd, VertexId w);

// u1=(0,0), u2=(2n-5,0), u3=(0,2n-5); an internal vertex w sits at (R2, R3).
// Throws GraphError if the wood is invalid.
GridDrawing schnyder_draw(const MaximalPlaneGraph &g, const SchnyderWood &wd);

// Recovers colors and directions from the slopes of a drawing produced by schnyder_draw.
// Throws GraphError if an edge slope fits no class or the two endpoints disagree.
SchnyderWood decode_schnyder_drawing(const MaximalPlaneGraph &g, const GridDrawing &p);

} // namespace canon
