#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "canon/plane_graph.hpp"

namespace canon {

enum class Dir : std::int8_t { Unset = 0, XToY = 1, YToX = 2 };

enum class CaseLabel : std::int8_t { Base, Contract, Remove, ContractAndRemove };

const char *to_string(CaseLabel c);

// Fields below the blank line are meaningful for s only.
struct VertexRecord {
    int degree = 0;
    bool is_outer = false;
    EdgeId first_incident_to_s = kNone;

    EdgeId e1 = kNone;
    EdgeId first_chord = kNone;
    EdgeId first_parallel = kNone;
    EdgeId first_lens = kNone;

    bool operator==(const VertexRecord &) const = default;
};

// Slots x and y start as the original endpoints (a, b); contraction rewrites a slot to s
// but never swaps them, so Dir keeps its meaning in terms of the input edge.
// Fields below the blank line are meaningful for edges at s only.
struct EdgeRecord {
    VertexId x = kNone, y = kNone;
    Dir dir = Dir::Unset;
    bool is_outer = false;
    EdgeId next_around_x = kNone, next_around_y = kNone;

    int ord = 0;
    EdgeId next_parallel_with_me = kNone;
    EdgeId next_chord = kNone;
    EdgeId next_nonloose_parallel = kNone;
    EdgeId next_nonloose_lens = kNone;

    bool operator==(const EdgeRecord &) const = default;
};

// Mutable plane multigraph with poles s and t. Edges at s form a linear list from e1
// (right path) to em = (s, t); every other rotation is circular.
class WellFormedGraph {
  public:
    explicit WellFormedGraph(const MaximalPlaneGraph &g);

    VertexId s() const { return s_; }
    VertexId t() const { return t_; }
    int num_vertices() const { return static_cast<int>(vs_.size()); }
    int num_edges() const { return static_cast<int>(es_.size()); }
    const VertexRecord &vertex(VertexId x) const { return vs_[x]; }
    const EdgeRecord &edge(EdgeId e) const { return es_[e]; }
    const std::vector<EdgeRecord> &edges() const { return es_; }

    VertexId other(EdgeId e, VertexId x) const { return es_[e].x == x ? es_[e].y : es_[e].x; }
    EdgeId next_around(EdgeId e, VertexId x) const {
        return es_[e].x == x ? es_[e].next_around_x : es_[e].next_around_y;
    }

    CaseLabel detect_case() const;
    EdgeId contract();
    void decontract(EdgeId e1);
    // Appends e1..ej to out and returns j.
    std::size_t remove(std::vector<EdgeId> &out);
    std::vector<EdgeId> remove();
    void reinsert(std::span<const EdgeId> removed);

    void orient_base();
    void clear_base();

    // record touches performed by surgery so far; setup_touches counts construction
    std::uint64_t touches() const { return touches_; }
    std::uint64_t setup_touches() const { return setup_touches_; }

    // records only; counters are ignored
    bool operator==(const WellFormedGraph &o) const {
        return s_ == o.s_ && t_ == o.t_ && vs_ == o.vs_ && es_ == o.es_;
    }

  private:
    EdgeId &next_slot(EdgeId e, VertexId x) { return es_[e].x == x ? es_[e].next_around_x : es_[e].next_around_y; }
    void orient_away_from_s(EdgeId e) { es_[e].dir = es_[e].x == s_ ? Dir::XToY : Dir::YToX; }
    void check_after(const char *what) const;

    VertexId s_, t_;
    std::vector<VertexRecord> vs_;
    std::vector<EdgeRecord> es_;
    std::uint64_t touches_ = 0;
    std::uint64_t setup_touches_ = 0;
};

inline WellFormedGraph build_well_formed(const MaximalPlaneGraph &g) { return WellFormedGraph(g); }

// Slow full scan: WF1-WF4, biconnectivity, Euler, faces, and every record recomputed
// from the current multigraph. Returns an empty string when everything holds.
std::string check_well_formed(const WellFormedGraph &w);

} // namespace canon
