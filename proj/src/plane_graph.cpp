#include "canon/plane_graph.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include <json.hpp>

namespace canon {

namespace {

std::string vname(VertexId x) { return std::to_string(x); }

Triple normalized(Triple t) {
    auto it = std::min_element(t.begin(), t.end());
    std::rotate(t.begin(), it, t.end());
    return t;
}

} // namespace

MaximalPlaneGraph MaximalPlaneGraph::from_rotations(const std::vector<std::vector<VertexId>> &rotations, Triple outer) {
    const int n = static_cast<int>(rotations.size());
    if (n < 3)
        throw GraphError("need at least 3 vertices, got " + std::to_string(n));

    MaximalPlaneGraph g;
    g.rot_.assign(n, {});
    std::unordered_map<std::int64_t, EdgeId> ids;
    std::vector<int> seen;
    for (VertexId x = 0; x < n; ++x) {
        std::vector<VertexId> sorted = rotations[x];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw GraphError("parallel edge at vertex " + vname(x));
        for (VertexId y : rotations[x]) {
            if (y < 0 || y >= n)
                throw GraphError("vertex " + vname(x) + " lists unknown neighbour " + vname(y));
            if (y == x)
                throw GraphError("self-loop at vertex " + vname(x));
            const std::int64_t key = static_cast<std::int64_t>(std::min(x, y)) * n + std::max(x, y);
            auto [it, fresh] = ids.try_emplace(key, static_cast<EdgeId>(g.edges_.size()));
            if (fresh) {
                g.edges_.push_back({x, y});
                seen.push_back(0);
            }
            ++seen[it->second];
            g.rot_[x].push_back(it->second);
        }
    }
    for (EdgeId e = 0; e < static_cast<EdgeId>(seen.size()); ++e)
        if (seen[e] != 2)
            throw GraphError("inconsistent rotation system: edge (" + vname(g.edges_[e].a) + "," +
                             vname(g.edges_[e].b) + ") listed at one endpoint only");
    if (g.num_edges() != 3 * n - 6)
        throw GraphError("wrong edge count: " + std::to_string(g.num_edges()) + " instead of " +
                         std::to_string(3 * n - 6));
    g.index_positions();
    g.validate_faces();
    g.outer_ = outer;
    g.validate_outer();
    return g;
}

void MaximalPlaneGraph::index_positions() {
    pos_.assign(edges_.size(), {kNone, kNone});
    for (VertexId x = 0; x < num_vertices(); ++x)
        for (int i = 0; i < degree(x); ++i) {
            EdgeId e = rot_[x][i];
            pos_[e][edges_[e].a == x ? 0 : 1] = i;
        }
}

EdgeId MaximalPlaneGraph::next_ccw(VertexId x, EdgeId e) const {
    int i = position(x, e) + 1;
    return rot_[x][i == degree(x) ? 0 : i];
}

EdgeId MaximalPlaneGraph::prev_ccw(VertexId x, EdgeId e) const {
    int i = position(x, e);
    return rot_[x][i == 0 ? degree(x) - 1 : i - 1];
}

EdgeId MaximalPlaneGraph::edge_between(VertexId x, VertexId y) const {
    for (EdgeId e : rot_[x])
        if (other(e, x) == y)
            return e;
    return kNone;
}

std::vector<std::vector<VertexId>> MaximalPlaneGraph::neighbor_rotations() const {
    std::vector<std::vector<VertexId>> out(num_vertices());
    for (VertexId x = 0; x < num_vertices(); ++x)
        for (EdgeId e : rot_[x])
            out[x].push_back(other(e, x));
    return out;
}

void MaximalPlaneGraph::validate_faces() const {
    const int n = num_vertices();
    std::vector<char> visited(2 * edges_.size(), 0);
    int count = 0;
    for (EdgeId e0 = 0; e0 < num_edges(); ++e0)
        for (int side = 0; side < 2; ++side) {
            if (visited[2 * e0 + side])
                continue;
            Dart d{side == 0 ? edges_[e0].a : edges_[e0].b, e0};
            std::vector<VertexId> corners;
            do {
                int idx = 2 * d.e + (d.from == edges_[d.e].a ? 0 : 1);
                if (visited[idx])
                    throw GraphError("inconsistent rotation system: face walk revisits a directed edge");
                visited[idx] = 1;
                corners.push_back(d.from);
                d = next_in_face(*this, d);
            } while (!(d.e == e0 && d.from == (side == 0 ? edges_[e0].a : edges_[e0].b)));
            if (corners.size() != 3 || corners[0] == corners[1] || corners[1] == corners[2] || corners[0] == corners[2])
                throw GraphError("inconsistent rotation system: face of length " + std::to_string(corners.size()) +
                                 " through vertex " + vname(corners[0]));
            ++count;
        }
    if (count != 2 * n - 4)
        throw GraphError("inconsistent rotation system: " + std::to_string(count) + " faces instead of " +
                         std::to_string(2 * n - 4));
}

void MaximalPlaneGraph::validate_outer() const {
    const int n = num_vertices();
    auto [u, v, z] = outer_;
    for (VertexId x : outer_)
        if (x < 0 || x >= n)
            throw GraphError("outer triple names unknown vertex " + vname(x));
    if (u == v || v == z || u == z)
        throw GraphError("outer triple has repeated vertices");
    // the face left of a->b->c->a, traced with next_in_face
    auto is_face = [&](VertexId a, VertexId b, VertexId c) {
        EdgeId e = edge_between(a, b);
        if (e == kNone)
            return false;
        Dart d = next_in_face(*this, {a, e});
        if (d.from != b || other(d.e, b) != c)
            return false;
        d = next_in_face(*this, d);
        return other(d.e, c) == a;
    };
    // the outer face lies left of u->z->v
    if (is_face(u, z, v))
        return;
    if (is_face(u, v, z))
        throw GraphError("outer face orientation: (" + vname(u) + "," + vname(v) + "," + vname(z) +
                         ") is listed clockwise");
    throw GraphError("outer triple (" + vname(u) + "," + vname(v) + "," + vname(z) + ") is not a face");
}

Dart next_in_face(const MaximalPlaneGraph &g, Dart d) {
    VertexId head = g.other(d.e, d.from);
    return {head, g.prev_ccw(head, d.e)};
}

std::vector<Triple> faces(const MaximalPlaneGraph &g) {
    std::vector<char> visited(2 * g.num_edges(), 0);
    std::vector<Triple> out;
    out.reserve(2 * g.num_vertices() - 4);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        for (int side = 0; side < 2; ++side) {
            if (visited[2 * e + side])
                continue;
            Dart d{side == 0 ? g.edge(e).a : g.edge(e).b, e};
            Triple t{};
            for (int i = 0; i < 3; ++i) {
                visited[2 * d.e + (d.from == g.edge(d.e).a ? 0 : 1)] = 1;
                t[i] = d.from;
                d = next_in_face(g, d);
            }
            out.push_back(normalized(t));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rooting> enumerate_rootings(const MaximalPlaneGraph &g) {
    std::vector<Rooting> out;
    for (const Triple &f : faces(g)) {
        out.push_back({{f[0], f[2], f[1]}, false});
        out.push_back({f, true});
    }
    return out;
}

MaximalPlaneGraph reroot(const MaximalPlaneGraph &g, const Rooting &r) {
    MaximalPlaneGraph h = g;
    if (r.reflected) {
        for (auto &rot : h.rot_)
            std::reverse(rot.begin(), rot.end());
        h.index_positions();
    }
    h.outer_ = r.face;
    h.validate_outer();
    return h;
}

Rooting inverse_rooting(const MaximalPlaneGraph &g, const Rooting &r) { return {g.outer(), r.reflected}; }

MaximalPlaneGraph parse_graph(std::string_view text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &ex) {
        throw GraphError(std::string("syntax error: ") + ex.what());
    }
    auto need = [](bool ok, const char *what) {
        if (!ok)
            throw GraphError(std::string("syntax error: ") + what);
    };
    need(doc.is_object(), "document must be an object");
    need(doc.contains("n") && doc["n"].is_number_integer(), "\"n\" must be an integer");
    need(doc.contains("rotations") && doc["rotations"].is_array(), "\"rotations\" must be an array");
    need(doc.contains("outer") && doc["outer"].is_array() && doc["outer"].size() == 3,
         "\"outer\" must be an array of three vertex ids");
    const auto n = doc["n"].get<std::int64_t>();
    need(n >= 0 && n < (1 << 28), "\"n\" out of range");
    need(doc["rotations"].size() == static_cast<std::size_t>(n), "\"rotations\" must have n entries");

    std::vector<std::vector<VertexId>> rotations;
    for (const auto &row : doc["rotations"]) {
        need(row.is_array(), "each rotation must be an array");
        auto &r = rotations.emplace_back();
        for (const auto &x : row) {
            need(x.is_number_integer(), "vertex ids must be integers");
            auto id = x.get<std::int64_t>();
            if (id < 0 || id >= n)
                throw GraphError("unknown vertex " + std::to_string(id));
            r.push_back(static_cast<VertexId>(id));
        }
    }
    Triple outer{};
    for (int i = 0; i < 3; ++i) {
        need(doc["outer"][i].is_number_integer(), "vertex ids must be integers");
        auto id = doc["outer"][i].get<std::int64_t>();
        if (id < 0 || id >= n)
            throw GraphError("outer triple names unknown vertex " + std::to_string(id));
        outer[i] = static_cast<VertexId>(id);
    }
    return MaximalPlaneGraph::from_rotations(rotations, outer);
}

std::string to_document(const MaximalPlaneGraph &g) {
    nlohmann::json doc;
    doc["n"] = g.num_vertices();
    doc["rotations"] = g.neighbor_rotations();
    doc["outer"] = g.outer();
    return doc.dump();
}

MaximalPlaneGraph random_stacked_triangulation(int n, std::uint64_t seed) {
    if (n < 3)
        throw GraphError("need at least 3 vertices");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<VertexId>> rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    std::vector<Triple> bounded{{0, 1, 2}};
    auto insert_after = [&](VertexId at, VertexId after, VertexId w) {
        auto &r = rot[at];
        r.insert(std::find(r.begin(), r.end(), after) + 1, w);
    };
    for (VertexId w = 3; w < n; ++w) {
        std::size_t i = rng() % bounded.size();
        auto [a, b, c] = bounded[i];
        insert_after(a, b, w);
        insert_after(b, c, w);
        insert_after(c, a, w);
        rot[w] = {a, b, c};
        bounded[i] = {a, b, w};
        bounded.push_back({b, c, w});
        bounded.push_back({c, a, w});
    }
    return MaximalPlaneGraph::from_rotations(rot, {0, 1, 2});
}

MaximalPlaneGraph random_flipped_triangulation(int n, int flips, std::uint64_t seed) {
    const MaximalPlaneGraph base = random_stacked_triangulation(n, seed);
    auto rot = base.neighbor_rotations();
    std::mt19937_64 rng(seed * 7919 + 13);
    auto idx = [&](int x, int y) {
        return static_cast<int>(std::find(rot[x].begin(), rot[x].end(), y) - rot[x].begin());
    };
    auto at = [&](int x, int i) {
        const int d = static_cast<int>(rot[x].size());
        return rot[x][((i % d) + d) % d];
    };
    auto outer = [&](int x) { return x <= 2; };
    for (int k = 0; k < flips; ++k) {
        const int a = static_cast<int>(rng() % n);
        const int b = at(a, static_cast<int>(rng() % rot[a].size()));
        if (outer(a) && outer(b))
            continue;
        if (rot[a].size() <= 3 || rot[b].size() <= 3)
            continue;
        const int c = at(b, idx(b, a) - 1); // face a, b, c
        const int d = at(a, idx(a, b) - 1); // face b, a, d
        if (std::find(rot[c].begin(), rot[c].end(), d) != rot[c].end())
            continue;
        rot[a].erase(rot[a].begin() + idx(a, b));
        rot[b].erase(rot[b].begin() + idx(b, a));
        rot[c].insert(rot[c].begin() + idx(c, a) + 1, d);
        rot[d].insert(rot[d].begin() + idx(d, b) + 1, c);
    }
    return MaximalPlaneGraph::from_rotations(rot, base.outer());
}

} // namespace canon
