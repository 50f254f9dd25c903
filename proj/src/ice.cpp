#include "canon/ice.hpp"

#include <stdexcept>

namespace canon {

void snapshot_orientation(const WellFormedGraph &w, CanonicalOrientation &out) {
    const auto &es = w.edges();
    out.a_to_b.resize(es.size());
    for (std::size_t e = 0; e < es.size(); ++e) {
        if (es[e].dir == Dir::Unset)
            throw std::logic_error("snapshot with unset orientation on edge " + std::to_string(e));
        out.a_to_b[e] = es[e].dir == Dir::XToY;
    }
}

CanonicalOrientation snapshot_orientation(const WellFormedGraph &w, const Triple &outer) {
    CanonicalOrientation out;
    out.outer = outer;
    snapshot_orientation(w, out);
    return out;
}

IceEnumerator::IceEnumerator(WellFormedGraph &w) : w_(w) {
    // each level removes at least one edge, so depth never exceeds the edge count
    frames_.reserve(w.num_edges() + 1);
    removed_.reserve(w.num_edges());
}

IceEnumerator::~IceEnumerator() { unwind(); }

bool IceEnumerator::next() {
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        push_fresh();
    } else {
        w_.clear_base();
        frames_.pop_back();
        if (!climb()) {
            done_ = true;
            return false;
        }
    }
    descend();
    ++emitted_;
    return true;
}

// Runs fresh frames down to a leaf.
bool IceEnumerator::descend() {
    for (;;) {
        Frame &f = frames_.back();
        f.label = w_.detect_case();
        switch (f.label) {
        case CaseLabel::Base:
            w_.orient_base();
            f.phase = Phase::AtBase;
            return true;
        case CaseLabel::Contract:
        case CaseLabel::ContractAndRemove:
            f.contracted = w_.contract();
            f.phase = Phase::InContract;
            break;
        case CaseLabel::Remove:
            f.removed_begin = static_cast<std::uint32_t>(removed_.size());
            w_.remove(removed_);
            f.phase = Phase::InRemove;
            break;
        }
        push_fresh();
    }
}

// Undoes finished branches until a frame opens its second branch. False when exhausted.
bool IceEnumerator::climb() {
    while (!frames_.empty()) {
        Frame &f = frames_.back();
        if (f.phase == Phase::InContract) {
            w_.decontract(f.contracted);
            if (f.label == CaseLabel::ContractAndRemove) {
                f.removed_begin = static_cast<std::uint32_t>(removed_.size());
                w_.remove(removed_);
                f.phase = Phase::InRemove;
                push_fresh();
                return true;
            }
        } else {
            w_.reinsert(std::span<const EdgeId>(removed_).subspan(f.removed_begin));
            removed_.resize(f.removed_begin);
        }
        frames_.pop_back();
    }
    return false;
}

void IceEnumerator::unwind() noexcept {
    while (!frames_.empty()) {
        Frame &f = frames_.back();
        switch (f.phase) {
        case Phase::AtBase:
            w_.clear_base();
            break;
        case Phase::InContract:
            w_.decontract(f.contracted);
            break;
        case Phase::InRemove:
            w_.reinsert(std::span<const EdgeId>(removed_).subspan(f.removed_begin));
            removed_.resize(f.removed_begin);
            break;
        case Phase::Fresh:
            break;
        }
        frames_.pop_back();
    }
    done_ = true;
}

std::uint64_t enumerate_inner_canonical(WellFormedGraph &w, const std::function<bool(const WellFormedGraph &)> &visit) {
    IceEnumerator it(w);
    while (it.next())
        if (!visit(w))
            break;
    return it.emitted();
}

std::uint64_t for_each_canonical_orientation(const MaximalPlaneGraph &g,
                                             const std::function<bool(const CanonicalOrientation &)> &visit) {
    WellFormedGraph w(g);
    CanonicalOrientation d;
    d.outer = g.outer();
    return enumerate_inner_canonical(w, [&](const WellFormedGraph &ws) {
        snapshot_orientation(ws, d);
        return visit(d);
    });
}

std::vector<CanonicalOrientation> canonical_orientations(const MaximalPlaneGraph &g) {
    std::vector<CanonicalOrientation> out;
    for_each_canonical_orientation(g, [&](const CanonicalOrientation &d) {
        out.push_back(d);
        return true;
    });
    return out;
}

} // namespace canon
