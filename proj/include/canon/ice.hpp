#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "canon/plane_graph.hpp"
#include "canon/well_formed.hpp"

namespace canon {

// a_to_b[e] is true when edge e = (a, b) of the rooted graph points from a to b.
struct CanonicalOrientation {
    Triple outer{};
    std::vector<bool> a_to_b;

    VertexId tail(const MaximalPlaneGraph &g, EdgeId e) const { return a_to_b[e] ? g.edge(e).a : g.edge(e).b; }
    VertexId head(const MaximalPlaneGraph &g, EdgeId e) const { return a_to_b[e] ? g.edge(e).b : g.edge(e).a; }

    bool operator==(const CanonicalOrientation &) const = default;
    auto operator<=>(const CanonicalOrientation &o) const {
        if (auto c = outer <=> o.outer; c != 0)
            return c;
        return a_to_b <=> o.a_to_b;
    }
};

// Reads the orientation bits at BASE. Throws std::logic_error if any bit is unset.
CanonicalOrientation snapshot_orientation(const WellFormedGraph &w, const Triple &outer);
void snapshot_orientation(const WellFormedGraph &w, CanonicalOrientation &out);

// Pull adapter over the recursion, driven by an explicit frame stack. Each successful
// next() leaves the workspace at a BASE leaf with every bit set. The destructor (or
// unwind()) undoes all pending surgery, restoring the workspace.
class IceEnumerator {
  public:
    explicit IceEnumerator(WellFormedGraph &w);
    IceEnumerator(const IceEnumerator &) = delete;
    IceEnumerator &operator=(const IceEnumerator &) = delete;
    ~IceEnumerator();

    bool next();
    void unwind() noexcept;
    const WellFormedGraph &workspace() const { return w_; }
    std::uint64_t emitted() const { return emitted_; }
    std::size_t depth() const { return frames_.size(); }

  private:
    enum class Phase : std::uint8_t { Fresh, InContract, InRemove, AtBase };
    struct Frame {
        CaseLabel label = CaseLabel::Base;
        Phase phase = Phase::Fresh;
        EdgeId contracted = kNone;
        std::uint32_t removed_begin = 0;
    };
    bool descend();
    bool climb();
    void push_fresh() { frames_.push_back(Frame{}); }

    WellFormedGraph &w_;
    std::vector<Frame> frames_;
    std::vector<EdgeId> removed_;
    bool started_ = false;
    bool done_ = false;
    std::uint64_t emitted_ = 0;
};

// Push API: visit is called at every BASE leaf with the workspace. Returning false stops.
// If visit throws, the workspace is restored before the exception propagates.
std::uint64_t enumerate_inner_canonical(WellFormedGraph &w, const std::function<bool(const WellFormedGraph &)> &visit);

// All canonical orientations of g with first vertex u, in ICE order.
std::uint64_t for_each_canonical_orientation(const MaximalPlaneGraph &g,
                                             const std::function<bool(const CanonicalOrientation &)> &visit);
std::vector<CanonicalOrientation> canonical_orientations(const MaximalPlaneGraph &g);

} // namespace canon
