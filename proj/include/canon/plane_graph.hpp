#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace canon {

using VertexId = int;
using EdgeId = int;
inline constexpr int kNone = -1;

using Triple = std::array<VertexId, 3>;

// Bad input: malformed document, invalid embedding, invalid ordering/orientation.
class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Input too large for an exponential oracle.
class SizeGuardError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    VertexId a = kNone;
    VertexId b = kNone;
    bool operator==(const Edge &) const = default;
};

struct Rooting {
    Triple face{};          // new outer triple, ccw in the rerooted embedding
    bool reflected = false; // rotations reversed
    bool operator==(const Rooting &) const = default;
};

// Simple triangulation with a ccw rotation system and a designated outer face (u, v, z).
class MaximalPlaneGraph {
  public:
    // rotations[x] lists the neighbours of x in ccw order.
    static MaximalPlaneGraph from_rotations(const std::vector<std::vector<VertexId>> &rotations, Triple outer);

    int num_vertices() const { return static_cast<int>(rot_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge &edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge> &edges() const { return edges_; }

    std::span<const EdgeId> rotation(VertexId x) const { return rot_[x]; }
    int degree(VertexId x) const { return static_cast<int>(rot_[x].size()); }
    VertexId other(EdgeId e, VertexId x) const { return edges_[e].a == x ? edges_[e].b : edges_[e].a; }
    // index of e inside rotation(x)
    int position(VertexId x, EdgeId e) const { return edges_[e].a == x ? pos_[e][0] : pos_[e][1]; }
    EdgeId next_ccw(VertexId x, EdgeId e) const;
    EdgeId prev_ccw(VertexId x, EdgeId e) const;
    EdgeId edge_between(VertexId x, VertexId y) const;

    const Triple &outer() const { return outer_; }
    VertexId u() const { return outer_[0]; }
    VertexId v() const { return outer_[1]; }
    VertexId z() const { return outer_[2]; }
    bool is_outer_vertex(VertexId x) const { return x == outer_[0] || x == outer_[1] || x == outer_[2]; }
    bool is_outer_edge(EdgeId e) const { return is_outer_vertex(edges_[e].a) && is_outer_vertex(edges_[e].b); }

    std::vector<std::vector<VertexId>> neighbor_rotations() const;

    bool operator==(const MaximalPlaneGraph &) const = default;

  private:
    friend MaximalPlaneGraph reroot(const MaximalPlaneGraph &, const Rooting &);

    void index_positions();
    void validate_faces() const;
    void validate_outer() const;

    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> rot_;
    std::vector<std::array<int, 2>> pos_;
    Triple outer_{};
};

MaximalPlaneGraph parse_graph(std::string_view text);
std::string to_document(const MaximalPlaneGraph &g);

// Next dart of the face to the left of a->b.
struct Dart {
    VertexId from;
    EdgeId e;
};
Dart next_in_face(const MaximalPlaneGraph &g, Dart d);

// All 2n-4 faces as ccw triples, each starting at its smallest id, sorted.
std::vector<Triple> faces(const MaximalPlaneGraph &g);

std::vector<Rooting> enumerate_rootings(const MaximalPlaneGraph &g);
MaximalPlaneGraph reroot(const MaximalPlaneGraph &g, const Rooting &r);
// r' with reroot(reroot(g, r), r') == g
Rooting inverse_rooting(const MaximalPlaneGraph &g, const Rooting &r);

MaximalPlaneGraph random_stacked_triangulation(int n, std::uint64_t seed);
// Stacked triangulation followed by up to `flips` random internal edge flips.
MaximalPlaneGraph random_flipped_triangulation(int n, int flips, std::uint64_t seed);

} // namespace canon
