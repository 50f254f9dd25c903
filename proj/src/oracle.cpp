#include "canon/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include <omp.h>

namespace canon {

namespace {

// Cheap filter shared by both brute-force variants; indeg and queue are scratch.
bool passes(const MaximalPlaneGraph &g, std::uint32_t mask, std::vector<int> &indeg, std::vector<VertexId> &queue) {
    const int n = g.num_vertices(), m = g.num_edges();
    std::fill(indeg.begin(), indeg.end(), 0);
    for (EdgeId e = 0; e < m; ++e)
        ++indeg[(mask >> e) & 1 ? g.edge(e).b : g.edge(e).a];
    if (indeg[g.u()] != 0)
        return false;
    for (VertexId x = 0; x < n; ++x) {
        if (x != g.u() && indeg[x] == 0)
            return false;
        if (!g.is_outer_vertex(x) && indeg[x] < 2)
            return false;
    }
    for (EdgeId e : g.rotation(g.z()))
        if (((mask >> e) & 1 ? g.edge(e).a : g.edge(e).b) == g.z())
            return false;
    // z is the only sink once the orientation is acyclic with a unique source and
    // every other vertex has an out-edge; check those two directly
    for (VertexId x = 0; x < n; ++x) {
        if (x == g.z())
            continue;
        bool out = false;
        for (EdgeId e : g.rotation(x))
            out = out || ((mask >> e) & 1 ? g.edge(e).a : g.edge(e).b) == x;
        if (!out)
            return false;
    }
    queue.clear();
    queue.push_back(g.u());
    for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId x = queue[i];
        for (EdgeId e : g.rotation(x)) {
            bool from_x = ((mask >> e) & 1 ? g.edge(e).a : g.edge(e).b) == x;
            if (from_x && --indeg[g.other(e, x)] == 0)
                queue.push_back(g.other(e, x));
        }
    }
    return static_cast<int>(queue.size()) == n;
}

CanonicalOrientation from_mask(const MaximalPlaneGraph &g, std::uint32_t mask) {
    CanonicalOrientation d;
    d.outer = g.outer();
    d.a_to_b.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        d.a_to_b[e] = (mask >> e) & 1;
    return d;
}

void guard_edges(const MaximalPlaneGraph &g) {
    if (g.num_edges() > kMaxBruteForceEdges)
        throw SizeGuardError("brute force over orientations needs at most " + std::to_string(kMaxBruteForceEdges) +
                             " edges, graph has " + std::to_string(g.num_edges()));
}

using i128 = __int128;

i128 cross(Point o, Point a, Point b) {
    return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}
i128 dot(Point o, Point a, Point b) {
    return static_cast<i128>(a.x - o.x) * (b.x - o.x) + static_cast<i128>(a.y - o.y) * (b.y - o.y);
}
int sign(i128 v) { return (v > 0) - (v < 0); }

bool on_segment(Point p, Point a, Point b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_touch(Point a, Point b, Point c, Point d) {
    int d1 = sign(cross(a, b, c)), d2 = sign(cross(a, b, d));
    int d3 = sign(cross(c, d, a)), d4 = sign(cross(c, d, b));
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    return (d1 == 0 && on_segment(c, a, b)) || (d2 == 0 && on_segment(d, a, b)) ||
           (d3 == 0 && on_segment(a, c, d)) || (d4 == 0 && on_segment(b, c, d));
}

// True if edges i and j conflict.
bool conflict(const MaximalPlaneGraph &g, const GridDrawing &p, EdgeId i, EdgeId j) {
    const Edge e = g.edge(i), f = g.edge(j);
    VertexId shared = kNone;
    if (e.a == f.a || e.a == f.b)
        shared = e.a;
    else if (e.b == f.a || e.b == f.b)
        shared = e.b;
    if (shared == kNone)
        return segments_touch(p[e.a], p[e.b], p[f.a], p[f.b]);
    const Point s = p[shared];
    const Point x = p[e.a == shared ? e.b : e.a], y = p[f.a == shared ? f.b : f.a];
    return cross(s, x, y) == 0 && dot(s, x, y) > 0;
}

Verdict pre_check(const MaximalPlaneGraph &g, const GridDrawing &p) {
    if (static_cast<int>(p.size()) != g.num_vertices())
        return Verdict::fail("drawing has " + std::to_string(p.size()) + " points, graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
    std::vector<std::pair<Point, VertexId>> sorted;
    for (VertexId x = 0; x < g.num_vertices(); ++x)
        sorted.push_back({p[x], x});
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].first == sorted[i - 1].first)
            return Verdict::fail("vertices " + std::to_string(sorted[i - 1].second) + " and " +
                                 std::to_string(sorted[i].second) + " share a point");
    return Verdict::pass();
}

Verdict report(const MaximalPlaneGraph &g, EdgeId i, EdgeId j) {
    auto name = [&](EdgeId e) {
        return "(" + std::to_string(g.edge(e).a) + "," + std::to_string(g.edge(e).b) + ")";
    };
    return Verdict::fail("edges " + name(i) + " and " + name(j) + " intersect");
}

} // namespace

Verdict is_canonical_orientation(const MaximalPlaneGraph &g, const CanonicalOrientation &d) {
    const int n = g.num_vertices(), m = g.num_edges();
    if (static_cast<int>(d.a_to_b.size()) != m)
        return Verdict::fail("orientation has " + std::to_string(d.a_to_b.size()) + " bits, graph has " +
                             std::to_string(m) + " edges");
    if (d.outer != g.outer())
        return Verdict::fail("orientation rooting differs from the graph's outer face");
    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (EdgeId e = 0; e < m; ++e) {
        ++indeg[d.head(g, e)];
        ++outdeg[d.tail(g, e)];
    }
    if (indeg[g.u()] != 0)
        return Verdict::fail("u not a source");
    if (outdeg[g.z()] != 0)
        return Verdict::fail("z not a sink");
    for (VertexId x = 0; x < n; ++x) {
        if (x != g.u() && indeg[x] == 0)
            return Verdict::fail("vertex " + std::to_string(x) + " is a second source");
        if (x != g.z() && outdeg[x] == 0)
            return Verdict::fail("vertex " + std::to_string(x) + " is a second sink");
    }
    std::vector<int> left = indeg;
    std::vector<VertexId> queue{g.u()};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (EdgeId e : g.rotation(queue[i]))
            if (d.tail(g, e) == queue[i] && --left[d.head(g, e)] == 0)
                queue.push_back(d.head(g, e));
    if (static_cast<int>(queue.size()) != n)
        return Verdict::fail("orientation has a directed cycle");
    for (VertexId x = 0; x < n; ++x)
        if (!g.is_outer_vertex(x) && indeg[x] < 2)
            return Verdict::fail("internal vertex " + std::to_string(x) + " indegree " + std::to_string(indeg[x]));
    return Verdict::pass();
}

OrientationSet brute_force_orientations(const MaximalPlaneGraph &g) {
    guard_edges(g);
    const std::int64_t total = std::int64_t{1} << g.num_edges();
    std::vector<std::vector<std::uint32_t>> found(omp_get_max_threads());
#pragma omp parallel
    {
        std::vector<int> indeg(g.num_vertices());
        std::vector<VertexId> queue;
        auto &mine = found[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < total; ++mask)
            if (passes(g, static_cast<std::uint32_t>(mask), indeg, queue))
                mine.push_back(static_cast<std::uint32_t>(mask));
    }
    OrientationSet out;
    for (const auto &list : found)
        for (std::uint32_t mask : list)
            out.insert(from_mask(g, mask));
    return out;
}

OrientationSet brute_force_orientations_serial(const MaximalPlaneGraph &g) {
    guard_edges(g);
    const std::int64_t total = std::int64_t{1} << g.num_edges();
    std::vector<int> indeg(g.num_vertices());
    std::vector<VertexId> queue;
    OrientationSet out;
    for (std::int64_t mask = 0; mask < total; ++mask)
        if (passes(g, static_cast<std::uint32_t>(mask), indeg, queue))
            out.insert(from_mask(g, static_cast<std::uint32_t>(mask)));
    return out;
}

OrderingSet brute_force_orderings(const MaximalPlaneGraph &g) {
    const int n = g.num_vertices();
    if (n > kMaxBruteForceVertices)
        throw SizeGuardError("brute force over orderings needs at most " + std::to_string(kMaxBruteForceVertices) +
                             " vertices, graph has " + std::to_string(n));
    Ordering seq{g.u()};
    for (VertexId x = 0; x < n; ++x)
        if (x != g.u())
            seq.push_back(x);
    OrderingSet out;
    do {
        if (is_canonical_ordering(g, seq))
            out.insert(seq);
    } while (std::next_permutation(seq.begin() + 1, seq.end()));
    return out;
}

Verdict check_planar_straightline(const MaximalPlaneGraph &g, const GridDrawing &p) {
    if (Verdict v = pre_check(g, p); !v)
        return v;
    const std::int64_t m = g.num_edges();
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first)
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = i + 1; j < m; ++j)
            if (i * m + j < first && conflict(g, p, static_cast<EdgeId>(i), static_cast<EdgeId>(j))) {
                first = std::min(first, i * m + j);
                break;
            }
    if (first == std::numeric_limits<std::int64_t>::max())
        return Verdict::pass();
    return report(g, static_cast<EdgeId>(first / m), static_cast<EdgeId>(first % m));
}

Verdict check_planar_straightline_serial(const MaximalPlaneGraph &g, const GridDrawing &p) {
    if (Verdict v = pre_check(g, p); !v)
        return v;
    for (EdgeId i = 0; i < g.num_edges(); ++i)
        for (EdgeId j = i + 1; j < g.num_edges(); ++j)
            if (conflict(g, p, i, j))
                return report(g, i, j);
    return Verdict::pass();
}

} // namespace canon
