#include "canon/schnyder.hpp"

#include <optional>

#include "canon/oracle.hpp"

namespace canon {

namespace {

bool outgoing_at(const MaximalPlaneGraph &g, const SchnyderWood &wd, EdgeId e, VertexId x) {
    return (g.edge(e).a == x) == wd.edges[e].a_to_b;
}

// Slot in the ccw pattern out1, in3, out2, in1, out3, in2 around an internal vertex.
int sector_slot(int color, bool out) {
    static constexpr int out_slot[3] = {0, 2, 4};
    static constexpr int in_slot[3] = {3, 5, 1};
    return out ? out_slot[color - 1] : in_slot[color - 1];
}

void check_shape(const MaximalPlaneGraph &g, const SchnyderWood &wd) {
    if (static_cast<int>(wd.edges.size()) != g.num_edges())
        throw GraphError("wood has " + std::to_string(wd.edges.size()) + " entries, graph has " +
                         std::to_string(g.num_edges()) + " edges");
    if (wd.outer != g.outer())
        throw GraphError("wood rooting differs from the graph's outer face");
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        int c = wd.edges[e].color;
        if (g.is_outer_edge(e) ? c != 0 : (c < 1 || c > 3))
            throw GraphError("wood has no valid color on edge " + std::to_string(e));
    }
}

// Parent of w in color class c, or kNone.
VertexId parent(const MaximalPlaneGraph &g, const SchnyderWood &wd, VertexId w, int c) {
    for (EdgeId e : g.rotation(w))
        if (wd.edges[e].color == c && outgoing_at(g, wd, e, w))
            return g.other(e, w);
    return kNone;
}

} // namespace

SchnyderWood wood_from_orientation(const MaximalPlaneGraph &g, const CanonicalOrientation &d) {
    if (Verdict v = is_canonical_orientation(g, d); !v)
        throw GraphError("not a canonical orientation: " + v.diagnostic);
    SchnyderWood wd;
    wd.outer = g.outer();
    wd.edges.assign(g.num_edges(), WoodEdge{});
    for (EdgeId e : g.rotation(g.z()))
        if (!g.is_outer_edge(e))
            wd.edges[e] = {3, d.a_to_b[e]};
    for (VertexId w = 0; w < g.num_vertices(); ++w) {
        if (g.is_outer_vertex(w))
            continue;
        const auto rot = g.rotation(w);
        const int deg = static_cast<int>(rot.size());
        auto incoming = [&](int i) { return d.head(g, rot[(i + deg) % deg]) == w; };
        int start = 0;
        while (!(incoming(start) && !incoming(start - 1)))
            ++start;
        int k = 0;
        while (incoming(start + k))
            ++k;
        for (int i = 0; i < k; ++i) {
            EdgeId e = rot[(start + i) % deg];
            if (i == 0 || i == k - 1)
                wd.edges[e] = {i == 0 ? 1 : 2, !d.a_to_b[e]};
            else
                wd.edges[e] = {3, d.a_to_b[e]};
        }
    }
    return wd;
}

Verdict validate_wood(const MaximalPlaneGraph &g, const SchnyderWood &wd) {
    check_shape(g, wd);
    const int n = g.num_vertices();
    for (int i = 0; i < 3; ++i) {
        VertexId r = wd.outer[i];
        for (EdgeId e : g.rotation(r)) {
            if (g.is_outer_edge(e))
                continue;
            if (outgoing_at(g, wd, e, r))
                return Verdict::fail("root u" + std::to_string(i + 1) + " has outgoing edge " + std::to_string(e));
            if (wd.edges[e].color != i + 1)
                return Verdict::fail("root u" + std::to_string(i + 1) + " has incoming edge " + std::to_string(e) +
                                     " of color " + std::to_string(wd.edges[e].color));
        }
    }
    for (VertexId w = 0; w < n; ++w) {
        if (g.is_outer_vertex(w))
            continue;
        const auto rot = g.rotation(w);
        const int deg = static_cast<int>(rot.size());
        int start = -1, outs = 0;
        for (int i = 0; i < deg; ++i) {
            if (!outgoing_at(g, wd, rot[i], w))
                continue;
            ++outs;
            if (wd.edges[rot[i]].color == 1)
                start = i;
        }
        std::array<int, 3> out_count{};
        for (EdgeId e : rot)
            if (outgoing_at(g, wd, e, w))
                ++out_count[wd.edges[e].color - 1];
        if (outs != 3 || out_count != std::array<int, 3>{1, 1, 1})
            return Verdict::fail("vertex " + std::to_string(w) + " does not have one outgoing edge per color");
        int slot = 0;
        for (int i = 0; i < deg; ++i) {
            EdgeId e = rot[(start + i) % deg];
            int s = sector_slot(wd.edges[e].color, outgoing_at(g, wd, e, w));
            if (s < slot)
                return Verdict::fail("vertex " + std::to_string(w) + " has edge " + std::to_string(e) +
                                     " outside its sector");
            slot = s;
        }
    }
    for (int c = 1; c <= 3; ++c) {
        std::vector<char> state(n, 0);
        for (VertexId w = 0; w < n; ++w) {
            if (g.is_outer_vertex(w))
                continue;
            std::vector<VertexId> trail;
            VertexId x = w;
            while (x != kNone && !g.is_outer_vertex(x) && state[x] == 0) {
                state[x] = 1;
                trail.push_back(x);
                x = parent(g, wd, x, c);
            }
            if (x != kNone && !g.is_outer_vertex(x) && state[x] == 1)
                return Verdict::fail("color " + std::to_string(c) + " has a cycle through vertex " + std::to_string(x));
            if (x != kNone && g.is_outer_vertex(x) && x != wd.outer[c - 1])
                return Verdict::fail("color " + std::to_string(c) + " reaches the wrong root from vertex " +
                                     std::to_string(w));
            for (VertexId t : trail)
                state[t] = 2;
        }
    }
    return Verdict::pass();
}

std::array<std::vector<VertexId>, 3> tree_paths(const MaximalPlaneGraph &g, const SchnyderWood &wd, VertexId w) {
    check_shape(g, wd);
    if (w < 0 || w >= g.num_vertices() || g.is_outer_vertex(w))
        throw GraphError("vertex " + std::to_string(w) + " is not an internal vertex");
    std::array<std::vector<VertexId>, 3> paths;
    for (int c = 1; c <= 3; ++c) {
        auto &p = paths[c - 1];
        p.push_back(w);
        while (p.back() != wd.outer[c - 1]) {
            VertexId x = parent(g, wd, p.back(), c);
            if (x == kNone)
                throw GraphError("vertex " + std::to_string(p.back()) + " has no outgoing edge of color " +
                                 std::to_string(c));
            if (static_cast<int>(p.size()) > g.num_vertices())
                throw GraphError("color " + std::to_string(c) + " has a cycle");
            p.push_back(x);
        }
    }
    return paths;
}

std::array<int, 3> region_face_counts(const MaximalPlaneGraph &g, const SchnyderWood &wd, VertexId w) {
    const auto paths = tree_paths(g, wd, w);
    const int m = g.num_edges();
    // face id per dart, dart index 2e for a->b and 2e+1 for b->a
    std::vector<int> face_of(2 * m, -1);
    int nf = 0;
    for (EdgeId e = 0; e < m; ++e)
        for (int side = 0; side < 2; ++side) {
            if (face_of[2 * e + side] != -1)
                continue;
            Dart d{side == 0 ? g.edge(e).a : g.edge(e).b, e};
            do {
                face_of[2 * d.e + (d.from == g.edge(d.e).a ? 0 : 1)] = nf;
                d = next_in_face(g, d);
            } while (d.e != e || (d.from == g.edge(e).a) != (side == 0));
            ++nf;
        }
    std::vector<std::vector<int>> face_darts(nf);
    for (int i = 0; i < 2 * m; ++i)
        face_darts[face_of[i]].push_back(i);

    auto blocked_by = [&](int p, int q) {
        std::vector<char> blocked(m, 0);
        for (EdgeId e = 0; e < m; ++e)
            blocked[e] = g.is_outer_edge(e);
        for (int i : {p, q})
            for (std::size_t k = 0; k + 1 < paths[i].size(); ++k)
                blocked[g.edge_between(paths[i][k], paths[i][k + 1])] = 1;
        return blocked;
    };
    auto flood = [&](VertexId from, VertexId to, const std::vector<char> &blocked) {
        EdgeId e = g.edge_between(from, to);
        int seed = face_of[2 * e + (from == g.edge(e).a ? 0 : 1)];
        std::vector<char> seen(nf, 0);
        std::vector<int> todo{seed};
        seen[seed] = 1;
        int count = 0;
        while (!todo.empty()) {
            int f = todo.back();
            todo.pop_back();
            ++count;
            for (int dart : face_darts[f]) {
                if (blocked[dart / 2])
                    continue;
                int h = face_of[dart ^ 1];
                if (!seen[h]) {
                    seen[h] = 1;
                    todo.push_back(h);
                }
            }
        }
        return count;
    };
    const VertexId u1 = wd.outer[0], u2 = wd.outer[1], u3 = wd.outer[2];
    return {flood(u2, u3, blocked_by(1, 2)), flood(u3, u1, blocked_by(0, 2)), flood(u1, u2, blocked_by(0, 1))};
}

GridDrawing schnyder_draw(const MaximalPlaneGraph &g, const SchnyderWood &wd) {
    if (Verdict v = validate_wood(g, wd); !v)
        throw GraphError("invalid wood: " + v.diagnostic);
    const int n = g.num_vertices();
    const std::int64_t f = 2 * n - 5;
    GridDrawing p(n);
    p[wd.outer[0]] = {0, 0};
    p[wd.outer[1]] = {f, 0};
    p[wd.outer[2]] = {0, f};
    for (VertexId w = 0; w < n; ++w) {
        if (g.is_outer_vertex(w))
            continue;
        auto r = region_face_counts(g, wd, w);
#ifdef CANON_CHECKS
        if (r[0] + r[1] + r[2] != f)
            throw std::logic_error("regions of vertex " + std::to_string(w) + " do not partition the faces");
#endif
        p[w] = {r[1], r[2]};
    }
    return p;
}

SchnyderWood decode_schnyder_drawing(const MaximalPlaneGraph &g, const GridDrawing &p) {
    if (static_cast<int>(p.size()) != g.num_vertices())
        throw GraphError("drawing size differs from vertex count");
    // color and direction of e seen from x: {color, outgoing at x}
    auto classify = [&](VertexId x, VertexId y) -> std::pair<int, bool> {
        const std::int64_t dx = p[y].x - p[x].x, dy = p[y].y - p[x].y;
        if (dx > 0 && dy > 0)
            return {1, false};
        if (dx < 0 && dy < 0)
            return {1, true};
        if (dx < 0 && dy > 0 && dy > -dx)
            return {3, true};
        if (dx < 0 && dy > 0 && dy < -dx)
            return {2, false};
        if (dx > 0 && dy < 0 && -dy > dx)
            return {3, false};
        if (dx > 0 && dy < 0 && -dy < dx)
            return {2, true};
        throw GraphError("edge " + std::to_string(x) + "-" + std::to_string(y) + " has a slope outside every class");
    };
    SchnyderWood wd;
    wd.outer = g.outer();
    wd.edges.assign(g.num_edges(), WoodEdge{});
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (g.is_outer_edge(e))
            continue;
        const VertexId a = g.edge(e).a, b = g.edge(e).b;
        std::optional<WoodEdge> seen;
        if (!g.is_outer_vertex(a)) {
            auto [c, out] = classify(a, b);
            seen = WoodEdge{c, out};
        }
        if (!g.is_outer_vertex(b)) {
            auto [c, out] = classify(b, a);
            WoodEdge here{c, !out};
            if (seen && *seen != here)
                throw GraphError("endpoints of edge " + std::to_string(e) + " disagree on its class");
            seen = here;
        }
        wd.edges[e] = *seen;
    }
    return wd;
}

} // namespace canon
