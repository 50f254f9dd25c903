#include "canon/well_formed.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

namespace canon {

const char *to_string(CaseLabel c) {
    switch (c) {
    case CaseLabel::Base:
        return "BASE";
    case CaseLabel::Contract:
        return "CONTRACT";
    case CaseLabel::Remove:
        return "REMOVE";
    case CaseLabel::ContractAndRemove:
        return "CONTRACT_AND_REMOVE";
    }
    return "?";
}

WellFormedGraph::WellFormedGraph(const MaximalPlaneGraph &g) : s_(g.u()), t_(g.z()) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    vs_.resize(n);
    es_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
        auto [a, b] = g.edge(e);
        EdgeRecord &r = es_[e];
        r.x = a;
        r.y = b;
        r.next_around_x = g.next_ccw(a, e);
        r.next_around_y = g.next_ccw(b, e);
        r.is_outer = g.is_outer_edge(e);
    }
    for (VertexId x = 0; x < n; ++x) {
        vs_[x].degree = g.degree(x);
        vs_[x].is_outer = g.is_outer_vertex(x);
    }
    VertexRecord &S = vs_[s_];
    const int d = S.degree;
    const EdgeId e1 = g.edge_between(s_, g.v());
    S.e1 = e1;
    EdgeId e = e1;
    for (int i = 1; i <= d; ++i) {
        es_[e].ord = d - i + 1;
        vs_[other(e, s_)].first_incident_to_s = e;
        if (i == d)
            next_slot(e, s_) = kNone;
        else
            e = next_around(e, s_);
    }
    setup_touches_ = static_cast<std::uint64_t>(n) + m + d;
}

CaseLabel WellFormedGraph::detect_case() const {
    const VertexRecord &S = vs_[s_];
    if (next_around(S.e1, s_) == kNone)
        return CaseLabel::Base;
    if (S.first_parallel == kNone)
        return CaseLabel::Contract;
    if (es_[S.e1].next_parallel_with_me != kNone)
        return CaseLabel::Remove;
    if (S.first_chord != kNone && es_[S.first_chord].ord >= es_[S.first_lens].ord)
        return CaseLabel::Contract;
    return CaseLabel::ContractAndRemove;
}

EdgeId WellFormedGraph::contract() {
    VertexRecord &S = vs_[s_];
    const EdgeId e1 = S.e1;
    const VertexId w1 = other(e1, s_);
    const int d = vs_[w1].degree;
    orient_away_from_s(e1);
    S.degree += d - 2;
    const EdgeId rp = S.first_parallel, rc = S.first_chord;
    EdgeId lc = kNone, lp = kNone, h = kNone;
    EdgeId e = next_around(e1, w1);
    S.e1 = e;
    for (int i = 1; i < d; ++i) {
        EdgeRecord &r = es_[e];
        const EdgeId succ = next_around(e, w1);
        (r.x == w1 ? r.x : r.y) = s_;
        r.ord = S.degree - i + 1;
        const VertexId x = other(e, s_);
        if (vs_[x].is_outer && !r.is_outer) {
            (lc == kNone ? S.first_chord : es_[lc].next_chord) = e;
            lc = e;
        }
        if (succ == e1) {
            r.next_nonloose_lens = S.first_lens;
            S.first_lens = e;
        }
        if (vs_[x].first_incident_to_s != kNone) {
            r.next_parallel_with_me = vs_[x].first_incident_to_s;
            (lp == kNone ? S.first_parallel : es_[lp].next_nonloose_parallel) = e;
            lp = e;
        }
        vs_[x].first_incident_to_s = e;
        h = e;
        e = succ;
    }
    if (lc != kNone)
        es_[lc].next_chord = rc;
    if (lp != kNone)
        es_[lp].next_nonloose_parallel = rp;
    next_slot(h, s_) = next_around(e1, s_);
    touches_ += d + 4;
    check_after("contract");
    return e1;
}

void WellFormedGraph::decontract(EdgeId e1) {
    VertexRecord &S = vs_[s_];
    const VertexId w1 = other(e1, s_);
    const int d = vs_[w1].degree;
    es_[e1].dir = Dir::Unset;
    const EdgeId h = S.first_lens;
    const EdgeId old_lens = es_[h].next_nonloose_lens;
    EdgeId old_chord = kNone, old_parallel = kNone;
    bool new_chords = false, new_parallels = false;
    EdgeId e = S.e1;
    for (int i = 1; i < d; ++i) {
        EdgeRecord &r = es_[e];
        const EdgeId succ = next_around(e, s_);
        const VertexId x = other(e, s_);
        if (vs_[x].is_outer && !r.is_outer) {
            new_chords = true;
            old_chord = r.next_chord;
        }
        if (r.next_parallel_with_me != kNone) {
            new_parallels = true;
            old_parallel = r.next_nonloose_parallel;
        }
        vs_[x].first_incident_to_s = r.next_parallel_with_me;
        (r.x == s_ ? r.x : r.y) = w1;
        r.ord = 0;
        r.next_parallel_with_me = r.next_chord = r.next_nonloose_parallel = r.next_nonloose_lens = kNone;
        e = succ;
    }
    assert(next_around(h, w1) == next_around(e1, s_));
    next_slot(h, w1) = e1;
    S.first_lens = old_lens;
    if (new_chords)
        S.first_chord = old_chord;
    if (new_parallels)
        S.first_parallel = old_parallel;
    S.e1 = e1;
    S.degree -= d - 2;
    touches_ += d + 4;
    check_after("decontract");
}

std::size_t WellFormedGraph::remove(std::vector<EdgeId> &out) {
    VertexRecord &S = vs_[s_];
    const EdgeId e1 = S.e1, ej = S.first_lens;
    const EdgeId ej1 = next_around(ej, s_);
    S.degree = es_[ej1].ord;
    S.first_lens = es_[ej].next_nonloose_lens;
    S.first_parallel = es_[ej].next_nonloose_parallel;
    S.e1 = ej1;
    EdgeId R = S.first_chord;
    std::size_t j = 0;
    for (EdgeId e = e1;;) {
        const VertexId vi = other(e, s_);
        orient_away_from_s(e);
        vs_[vi].is_outer = true;
        vs_[vi].degree -= 1;
        out.push_back(e);
        ++j;
        const EdgeId succ = next_around(e, s_);
        // the edge left of e_i at v_i becomes outer and takes e_i's place in the rotation
        const EdgeId border = e == ej ? ej1 : next_around(succ, other(succ, s_));
        es_[border].is_outer = true;
        next_slot(border, vi) = next_around(e, vi);

        EdgeId rp = es_[e].next_parallel_with_me;
        vs_[vi].first_incident_to_s = rp;
        if (e == ej)
            rp = es_[rp].next_parallel_with_me;
        if (e != e1 && rp != kNone) {
            EdgeId a = rp;
            for (EdgeId b = es_[a].next_parallel_with_me; b != kNone; b = es_[b].next_parallel_with_me) {
                es_[a].next_chord = b;
                a = b;
                ++touches_;
            }
            es_[a].next_chord = R;
            R = rp;
        }
        touches_ += 2;
        if (e == ej)
            break;
        e = succ;
    }
    // j = 1: e2 was the rightmost chord and is now on the right path
    if (ej == e1 && next_around(ej1, s_) != kNone) {
        assert(R == ej1);
        R = es_[ej1].next_chord;
        es_[ej1].next_chord = kNone;
    }
    S.first_chord = R;
    touches_ += 4;
    check_after("remove");
    return j;
}

std::vector<EdgeId> WellFormedGraph::remove() {
    std::vector<EdgeId> out;
    remove(out);
    return out;
}

void WellFormedGraph::reinsert(std::span<const EdgeId> removed) {
    VertexRecord &S = vs_[s_];
    const std::size_t j = removed.size();
    const EdgeId e1 = removed.front(), ej = removed.back();
    const EdgeId ej1 = next_around(ej, s_);
    if (j == 1 && next_around(ej1, s_) != kNone) {
        es_[ej1].next_chord = S.first_chord;
        S.first_chord = ej1;
    }
    EdgeId first_parallel = kNone;
    for (std::size_t i = j; i >= 1; --i) {
        const EdgeId e = removed[i - 1];
        const VertexId vi = other(e, s_);
        if (i != 1) {
            EdgeId rp = es_[e].next_parallel_with_me;
            if (i == j)
                rp = es_[rp].next_parallel_with_me;
            if (rp != kNone) {
                EdgeId a = rp;
                while (es_[a].next_parallel_with_me != kNone) {
                    EdgeId b = es_[a].next_parallel_with_me;
                    es_[a].next_chord = kNone;
                    a = b;
                    ++touches_;
                }
                S.first_chord = es_[a].next_chord;
                es_[a].next_chord = kNone;
            }
            vs_[vi].is_outer = false;
        }
        vs_[vi].first_incident_to_s = e;
        vs_[vi].degree += 1;
        const EdgeId border = i == j ? ej1 : next_around(removed[i], other(removed[i], s_));
        next_slot(border, vi) = e;
        es_[border].is_outer = i == j && next_around(ej1, s_) == kNone;
        if (es_[e].next_parallel_with_me != kNone)
            first_parallel = e;
        es_[e].dir = Dir::Unset;
        touches_ += 2;
    }
    S.e1 = e1;
    S.first_lens = ej;
    S.first_parallel = first_parallel;
    S.degree += static_cast<int>(j);
    touches_ += 4;
    check_after("reinsert");
}

void WellFormedGraph::orient_base() {
    orient_away_from_s(vs_[s_].e1);
    ++touches_;
}

void WellFormedGraph::clear_base() {
    es_[vs_[s_].e1].dir = Dir::Unset;
    ++touches_;
}

void WellFormedGraph::check_after([[maybe_unused]] const char *what) const {
#ifdef CANON_CHECKS
    std::string err = check_well_formed(*this);
    if (!err.empty())
        throw std::logic_error(std::string("after ") + what + ": " + err);
#endif
}

namespace {

struct Scan {
    const WellFormedGraph &w;
    std::vector<char> alive_v, alive_e;
    std::vector<std::vector<EdgeId>> rot;
    std::vector<std::array<int, 2>> pos; // position of edge at slot x / slot y
    std::vector<EdgeId> at_s;            // e1..em

    explicit Scan(const WellFormedGraph &g)
        : w(g), alive_v(g.num_vertices(), 0), alive_e(g.num_edges(), 0), rot(g.num_vertices()),
          pos(g.num_edges(), {-1, -1}) {}

    int slot(EdgeId e, VertexId x) const { return w.edge(e).x == x ? 0 : 1; }

    std::string collect() {
        const VertexId s = w.s();
        const int m = w.num_edges();
        for (EdgeId e = w.vertex(s).e1; e != kNone; e = w.next_around(e, s)) {
            if (static_cast<int>(at_s.size()) > m)
                return "rotation at s does not terminate";
            if (w.edge(e).x != s && w.edge(e).y != s)
                return "edge " + std::to_string(e) + " in the list of s is not incident to s";
            at_s.push_back(e);
        }
        if (at_s.empty())
            return "s has no edges";
        rot[s] = at_s;
        alive_v[s] = 1;
        std::vector<std::pair<VertexId, EdgeId>> todo;
        for (EdgeId e : at_s)
            todo.push_back({w.other(e, s), e});
        while (!todo.empty()) {
            auto [x, e0] = todo.back();
            todo.pop_back();
            if (alive_v[x])
                continue;
            alive_v[x] = 1;
            EdgeId e = e0;
            do {
                if (w.edge(e).x != x && w.edge(e).y != x)
                    return "edge " + std::to_string(e) + " in the rotation of " + std::to_string(x) +
                           " is not incident to it";
                rot[x].push_back(e);
                if (static_cast<int>(rot[x].size()) > m)
                    return "rotation of " + std::to_string(x) + " does not close";
                VertexId y = w.other(e, x);
                if (!alive_v[y])
                    todo.push_back({y, e});
                e = w.next_around(e, x);
            } while (e != e0);
        }
        std::vector<int> sides(m, 0);
        for (VertexId x = 0; x < w.num_vertices(); ++x) {
            if (!alive_v[x])
                continue;
            for (int i = 0; i < static_cast<int>(rot[x].size()); ++i) {
                EdgeId e = rot[x][i];
                if (w.edge(e).x == w.edge(e).y)
                    return "self-loop on edge " + std::to_string(e);
                int &p = pos[e][slot(e, x)];
                if (p != -1)
                    return "edge " + std::to_string(e) + " repeated in rotation of " + std::to_string(x);
                p = i;
                ++sides[e];
                alive_e[e] = 1;
            }
        }
        for (EdgeId e = 0; e < m; ++e)
            if (alive_e[e] && sides[e] != 2)
                return "edge " + std::to_string(e) + " appears at one endpoint only";
        return {};
    }

    EdgeId prev_ccw(VertexId x, EdgeId e) const {
        const auto &r = rot[x];
        int i = pos[e][slot(e, x)];
        return r[i == 0 ? r.size() - 1 : i - 1];
    }
};

bool biconnected(const Scan &sc, int alive_count) {
    const WellFormedGraph &w = sc.w;
    std::vector<int> disc(w.num_vertices(), -1), low(w.num_vertices(), 0);
    int timer = 0;
    bool ok = true;
    std::function<void(VertexId, EdgeId)> dfs = [&](VertexId x, EdgeId via) {
        disc[x] = low[x] = timer++;
        int children = 0;
        for (EdgeId e : sc.rot[x]) {
            if (e == via)
                continue;
            VertexId y = w.other(e, x);
            if (disc[y] == -1) {
                ++children;
                dfs(y, e);
                low[x] = std::min(low[x], low[y]);
                if (via != kNone && low[y] >= disc[x])
                    ok = false;
            } else {
                low[x] = std::min(low[x], disc[y]);
            }
        }
        if (via == kNone && children > 1)
            ok = false;
    };
    dfs(w.s(), kNone);
    return ok && timer == alive_count;
}

} // namespace

std::string check_well_formed(const WellFormedGraph &w) {
    Scan sc(w);
    if (std::string err = sc.collect(); !err.empty())
        return err;
    const VertexId s = w.s(), t = w.t();
    const int n = w.num_vertices(), m = w.num_edges();
    const auto &at_s = sc.at_s;
    const int deg_s = static_cast<int>(at_s.size());

    int V = 0, E = 0;
    for (VertexId x = 0; x < n; ++x)
        V += sc.alive_v[x];
    for (EdgeId e = 0; e < m; ++e)
        E += sc.alive_e[e];
    if (!sc.alive_v[t])
        return "t is not in the graph";

    // faces, treating the list at s as circular
    std::vector<char> seen(2 * m, 0);
    std::vector<char> outer_v(n, 0), outer_e(m, 0);
    int F = 0;
    const EdgeId em = at_s.back();
    if (w.other(em, s) != t)
        return "leftmost edge at s does not reach t";
    auto trace = [&](VertexId from, EdgeId e0, std::vector<VertexId> &verts, std::vector<EdgeId> &eds) {
        VertexId x = from;
        EdgeId e = e0;
        do {
            seen[2 * e + sc.slot(e, x)] = 1;
            verts.push_back(x);
            eds.push_back(e);
            VertexId y = w.other(e, x);
            e = sc.prev_ccw(y, e);
            x = y;
        } while (!(x == from && e == e0) && static_cast<int>(verts.size()) <= 2 * m);
    };
    {
        std::vector<VertexId> verts;
        std::vector<EdgeId> eds;
        trace(s, em, verts, eds);
        ++F;
        std::vector<VertexId> sorted = verts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return "outer face boundary is not a simple cycle";
        if (eds.back() != at_s.front())
            return "e1 is not on the outer face";
        for (VertexId x : verts)
            outer_v[x] = 1;
        for (EdgeId e : eds)
            outer_e[e] = 1;
    }
    for (VertexId x = 0; x < n; ++x) {
        if (!sc.alive_v[x])
            continue;
        for (EdgeId e : sc.rot[x]) {
            if (seen[2 * e + sc.slot(e, x)])
                continue;
            std::vector<VertexId> verts;
            std::vector<EdgeId> eds;
            trace(x, e, verts, eds);
            ++F;
            std::vector<VertexId> sorted = verts;
            std::sort(sorted.begin(), sorted.end());
            bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            if ((verts.size() != 2 && verts.size() != 3) || !distinct)
                return "internal face of length " + std::to_string(verts.size()) + " at vertex " +
                       std::to_string(x);
        }
    }
    if (V - E + F != 2)
        return "Euler check failed: V - E + F = " + std::to_string(V - E + F);
    if (!biconnected(sc, V))
        return "graph is not biconnected";

    // WF3: multi-edges only at s
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (EdgeId e = 0; e < m; ++e)
        if (sc.alive_e[e]) {
            auto [x, y] = std::minmax(w.edge(e).x, w.edge(e).y);
            if (++mult[{x, y}] > 1 && x != s && y != s)
                return "parallel edges between " + std::to_string(x) + " and " + std::to_string(y);
        }

    // WF4 along the list at s
    std::vector<VertexId> nb(deg_s);
    for (int i = 0; i < deg_s; ++i)
        nb[i] = w.other(at_s[i], s);
    std::vector<int> lens_prefix(deg_s, 0); // lens_prefix[k] = #lens pairs (i, i+1) with i < k
    for (int i = 0; i + 1 < deg_s; ++i)
        lens_prefix[i + 1] = lens_prefix[i] + (nb[i] == nb[i + 1]);
    std::vector<int> next_same(deg_s, -1);
    {
        std::vector<int> last(n, -1);
        for (int i = deg_s - 1; i >= 0; --i) {
            next_same[i] = last[nb[i]];
            last[nb[i]] = i;
        }
    }
    for (int p = 0; p < deg_s; ++p) {
        int q = next_same[p];
        if (q != -1 && lens_prefix[q] - lens_prefix[p] == 0)
            return "WF4: parallel pair at positions " + std::to_string(p + 1) + "," + std::to_string(q + 1) +
                   " contains no multilens";
    }

    // records
    auto mismatch = [](const std::string &what, long have, long want) {
        return what + " is " + std::to_string(have) + ", expected " + std::to_string(want);
    };
    const VertexRecord &S = w.vertex(s);
    if (S.degree != deg_s)
        return mismatch("deg(s)", S.degree, deg_s);
    if (S.first_incident_to_s != kNone)
        return "s has first_incident_to_s set";
    std::vector<EdgeId> first_to(n, kNone);
    for (int i = deg_s - 1; i >= 0; --i)
        first_to[nb[i]] = at_s[i];
    for (VertexId x = 0; x < n; ++x) {
        if (!sc.alive_v[x])
            continue;
        const VertexRecord &r = w.vertex(x);
        const std::string name = "vertex " + std::to_string(x);
        if (r.is_outer != static_cast<bool>(outer_v[x]))
            return name + " has a wrong outer flag";
        if (x == s)
            continue;
        if (r.degree != static_cast<int>(sc.rot[x].size()))
            return mismatch(name + " degree", r.degree, static_cast<long>(sc.rot[x].size()));
        if (r.first_incident_to_s != first_to[x])
            return mismatch(name + " first_incident_to_s", r.first_incident_to_s, first_to[x]);
        if (r.e1 != kNone || r.first_chord != kNone || r.first_parallel != kNone || r.first_lens != kNone)
            return name + " carries pole-only references";
    }
    std::vector<char> on_s(m, 0);
    for (EdgeId e : at_s)
        on_s[e] = 1;
    for (EdgeId e = 0; e < m; ++e) {
        const EdgeRecord &r = w.edge(e);
        const std::string name = "edge " + std::to_string(e);
        if (!sc.alive_e[e]) {
            if (r.dir == Dir::Unset)
                return name + " left the graph without an orientation";
            continue;
        }
        if (r.dir != Dir::Unset)
            return name + " is oriented while still in the graph";
        if (r.is_outer != static_cast<bool>(outer_e[e]))
            return name + " has a wrong outer flag";
        if (!on_s[e] && (r.ord != 0 || r.next_parallel_with_me != kNone || r.next_chord != kNone ||
                         r.next_nonloose_parallel != kNone || r.next_nonloose_lens != kNone))
            return name + " is not at s but carries s-only fields";
    }

    if (S.e1 != at_s.front())
        return "S.e1 is wrong";
    auto is_chord = [&](int i) { return outer_v[nb[i]] && !outer_e[at_s[i]]; };
    auto is_nonloose = [&](int i) { return next_same[i] != -1; };
    auto is_lens = [&](int i) { return i + 1 < deg_s && nb[i] == nb[i + 1]; };
    struct Chain {
        const char *name;
        std::function<bool(int)> member;
        EdgeId VertexRecord::*head;
        EdgeId EdgeRecord::*next;
    };
    const Chain chains[] = {
        {"chord", is_chord, &VertexRecord::first_chord, &EdgeRecord::next_chord},
        {"nonloose parallel", is_nonloose, &VertexRecord::first_parallel, &EdgeRecord::next_nonloose_parallel},
        {"lens", is_lens, &VertexRecord::first_lens, &EdgeRecord::next_nonloose_lens},
    };
    for (int i = 0; i < deg_s; ++i) {
        const EdgeRecord &r = w.edge(at_s[i]);
        const std::string name = "edge " + std::to_string(at_s[i]);
        if (r.ord != deg_s - i)
            return mismatch(name + " ord", r.ord, deg_s - i);
        EdgeId want = next_same[i] == -1 ? kNone : at_s[next_same[i]];
        if (r.next_parallel_with_me != want)
            return mismatch(name + " next_parallel_with_me", r.next_parallel_with_me, want);
    }
    for (const Chain &c : chains) {
        EdgeId head = kNone;
        std::vector<EdgeId> want_next(m, kNone);
        for (int i = deg_s - 1; i >= 0; --i)
            if (c.member(i)) {
                want_next[at_s[i]] = head;
                head = at_s[i];
            }
        if (S.*c.head != head)
            return mismatch(std::string("S first ") + c.name, S.*c.head, head);
        for (int i = 0; i < deg_s; ++i)
            if (w.edge(at_s[i]).*c.next != want_next[at_s[i]])
                return mismatch("edge " + std::to_string(at_s[i]) + " next " + c.name,
                                w.edge(at_s[i]).*c.next, want_next[at_s[i]]);
    }
    return {};
}

} // namespace canon
