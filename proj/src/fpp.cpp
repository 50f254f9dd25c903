#include "canon/fpp.hpp"

#include <queue>
#include <stdexcept>

namespace canon {

namespace {

std::vector<int> ranks_of(const MaximalPlaneGraph &g, std::span<const VertexId> order) {
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        throw GraphError("ordering has " + std::to_string(order.size()) + " entries, graph has " + std::to_string(n) +
                         " vertices");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        VertexId x = order[i];
        if (x < 0 || x >= n || rank[x] != -1)
            throw GraphError("ordering is not a permutation of the vertices");
        rank[x] = i;
    }
    if (order[0] != g.u() || order[1] != g.v() || order[n - 1] != g.z())
        throw GraphError("ordering must start with u, v and end with z");
    if (g.edge_between(order[2], g.u()) == kNone || g.edge_between(order[2], g.v()) == kNone)
        throw GraphError("third vertex is not adjacent to both u and v");
    return rank;
}

// Neighbours of x placed before it, in ccw order: w_p first, w_q last.
void lower_block(const MaximalPlaneGraph &g, VertexId x, const std::vector<int> &rank, std::vector<VertexId> &out) {
    out.clear();
    const auto rot = g.rotation(x);
    const int d = static_cast<int>(rot.size());
    const int r = rank[x];
    auto lower = [&](int i) { return rank[g.other(rot[(i + d) % d], x)] < r; };
    int start = -1, starts = 0, count = 0;
    for (int i = 0; i < d; ++i) {
        if (!lower(i))
            continue;
        ++count;
        if (!lower(i - 1)) {
            start = i;
            ++starts;
        }
    }
    if (count == d) {
        if (x != g.z())
            throw GraphError("vertex " + std::to_string(x) + " has no later neighbour");
        // the last vertex sees the whole outer path, starting at u
        start = g.position(x, g.edge_between(x, g.u()));
        starts = 1;
    }
    if (count < 2)
        throw GraphError("vertex " + std::to_string(x) + " has fewer than two earlier neighbours");
    if (starts != 1)
        throw GraphError("earlier neighbours of vertex " + std::to_string(x) + " are not consecutive around it");
    for (int i = 0; i < count; ++i)
        out.push_back(g.other(rot[(start + i) % d], x));
}

} // namespace

GridDrawing fpp_draw(const MaximalPlaneGraph &g, std::span<const VertexId> order) {
    const int n = g.num_vertices();
    const std::vector<int> rank = ranks_of(g, order);
    std::vector<std::int64_t> dx(n, 0), y(n, 0);
    std::vector<VertexId> next(n, kNone), covered(n, kNone);
    std::vector<char> on_contour(n, 0);

    const VertexId a = order[0], b = order[1], c = order[2];
    dx[c] = 1, y[c] = 1;
    dx[b] = 1;
    next[a] = c, next[c] = b;
    on_contour[a] = on_contour[b] = on_contour[c] = 1;

    std::vector<VertexId> block;
    for (int k = 3; k < n; ++k) {
        const VertexId x = order[k];
        lower_block(g, x, rank, block);
        const VertexId wp = block.front(), wq = block.back();
        VertexId w = wp;
        for (std::size_t i = 0; i < block.size(); ++i, w = next[w])
            if (w != block[i] || !on_contour[w])
                throw GraphError("earlier neighbours of vertex " + std::to_string(x) +
                                 " are not an interval of the outer path");
        const VertexId wp1 = next[wp];
        dx[wp1] += 1;
        dx[wq] += 1;
        std::int64_t delta = 0;
        VertexId last_covered = kNone;
        for (VertexId v = wp1;; v = next[v]) {
            delta += dx[v];
            if (v == wq)
                break;
            on_contour[v] = 0;
            last_covered = v;
        }
        dx[x] = (delta + y[wq] - y[wp]) / 2;
        y[x] = (delta + y[wq] + y[wp]) / 2;
        dx[wq] = delta - dx[x];
        if (wp1 != wq) {
            dx[wp1] -= dx[x];
            covered[x] = wp1;
            next[last_covered] = kNone;
        }
        next[wp] = x;
        next[x] = wq;
        on_contour[x] = 1;
    }

    GridDrawing out(n);
    std::vector<VertexId> stack;
    std::int64_t acc = 0;
    for (VertexId v = a; v != kNone; v = next[v]) {
        acc += dx[v];
        out[v] = {acc, y[v]};
        stack.push_back(v);
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        std::int64_t base = out[v].x;
        for (VertexId cv = covered[v]; cv != kNone; cv = next[cv]) {
            base += dx[cv];
            out[cv] = {base, y[cv]};
            stack.push_back(cv);
        }
    }
    return out;
}

GridDrawing fpp_draw_reference(const MaximalPlaneGraph &g, std::span<const VertexId> order, int k_max) {
    const int n = g.num_vertices();
    if (k_max < 3 || k_max > n)
        throw GraphError("prefix length must lie in [3, n]");
    const std::vector<int> rank = ranks_of(g, order);
    GridDrawing p(n);
    std::vector<std::vector<VertexId>> M(n);
    const VertexId a = order[0], b = order[1], c = order[2];
    p[a] = {0, 0}, p[b] = {2, 0}, p[c] = {1, 1};
    M[a] = {a, b, c};
    M[c] = {b, c};
    M[b] = {b};
    std::vector<VertexId> contour{a, c, b};

    auto check_invariants = [&](int k) {
        for (std::size_t i = 0; i + 1 < contour.size(); ++i) {
            Point s = p[contour[i]], t = p[contour[i + 1]];
            if (t.x <= s.x || (t.y - s.y != t.x - s.x && s.y - t.y != t.x - s.x))
                throw std::logic_error("contour slope invariant broken after step " + std::to_string(k));
        }
        std::vector<char> mark(n, 0);
        for (VertexId v : M[contour[0]])
            mark[v] = 1;
        for (std::size_t i = 1; i < contour.size(); ++i) {
            if (M[contour[i]].size() >= M[contour[i - 1]].size())
                throw std::logic_error("shift sets not strictly nested after step " + std::to_string(k));
            for (VertexId v : M[contour[i]])
                if (!mark[v])
                    throw std::logic_error("shift sets not nested after step " + std::to_string(k));
            std::fill(mark.begin(), mark.end(), 0);
            for (VertexId v : M[contour[i]])
                mark[v] = 1;
        }
    };
    check_invariants(3);

    std::vector<VertexId> block;
    for (int k = 3; k < k_max; ++k) {
        const VertexId x = order[k];
        lower_block(g, x, rank, block);
        std::size_t pi = 0;
        while (pi < contour.size() && contour[pi] != block.front())
            ++pi;
        const std::size_t qi = pi + block.size() - 1;
        if (qi >= contour.size() || !std::equal(block.begin(), block.end(), contour.begin() + pi))
            throw GraphError("earlier neighbours of vertex " + std::to_string(x) +
                             " are not an interval of the outer path");
        for (VertexId v : M[contour[pi + 1]])
            p[v].x += 1;
        for (VertexId v : M[contour[qi]])
            p[v].x += 1;
        const Point wp = p[contour[pi]], wq = p[contour[qi]];
        // intersection of slope +1 through wp and slope -1 through wq
        p[x] = {(wp.x + wq.x + wq.y - wp.y) / 2, (wq.x - wp.x + wq.y + wp.y) / 2};
        for (std::size_t i = 0; i <= pi; ++i)
            M[contour[i]].push_back(x);
        M[x] = M[contour[pi + 1]];
        M[x].push_back(x);
        contour.erase(contour.begin() + pi + 1, contour.begin() + qi);
        contour.insert(contour.begin() + pi + 1, x);
        check_invariants(k + 1);
    }
    return p;
}

GridDrawing fpp_draw_reference(const MaximalPlaneGraph &g, std::span<const VertexId> order) {
    return fpp_draw_reference(g, order, g.num_vertices());
}

GridDrawing canonical_drawing(const MaximalPlaneGraph &g, const CanonicalOrientation &d) {
    const int n = g.num_vertices();
    std::vector<int> indeg(n, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        ++indeg[d.head(g, e)];
    std::vector<VertexId> order;
    std::queue<VertexId> ready;
    for (VertexId x = 0; x < n; ++x)
        if (indeg[x] == 0)
            ready.push(x);
    while (!ready.empty()) {
        VertexId x = ready.front();
        ready.pop();
        order.push_back(x);
        for (EdgeId e : g.rotation(x))
            if (d.tail(g, e) == x && --indeg[d.head(g, e)] == 0)
                ready.push(d.head(g, e));
    }
    if (static_cast<int>(order.size()) != n)
        throw GraphError("orientation has a directed cycle");
    return fpp_draw(g, order);
}

} // namespace canon
