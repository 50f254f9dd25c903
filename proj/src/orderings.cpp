#include "canon/orderings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace canon {

namespace {

class Bitset {
  public:
    explicit Bitset(int n) : w_((n + 63) / 64, 0) {}
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    // smallest set index >= i, or -1
    int next(int i) const {
        std::size_t k = static_cast<std::size_t>(i) >> 6;
        if (k >= w_.size())
            return -1;
        std::uint64_t word = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (word == 0) {
            if (++k == w_.size())
                return -1;
            word = w_[k];
        }
        return static_cast<int>(k * 64 + std::countr_zero(word));
    }

  private:
    std::vector<std::uint64_t> w_;
};

struct Sorter {
    const MaximalPlaneGraph &g;
    const CanonicalOrientation &d;
    const std::function<bool(std::span<const VertexId>)> &visit;
    std::vector<int> indeg;
    Bitset avail;
    std::vector<VertexId> seq;
    std::uint64_t count = 0;
    bool stop = false;

    Sorter(const MaximalPlaneGraph &g_, const CanonicalOrientation &d_,
           const std::function<bool(std::span<const VertexId>)> &v)
        : g(g_), d(d_), visit(v), indeg(g_.num_vertices(), 0), avail(g_.num_vertices()) {}

    void run() {
        const int n = g.num_vertices();
        if (seq.size() == static_cast<std::size_t>(n)) {
            ++count;
            stop = !visit(seq);
            return;
        }
        int x = avail.next(0);
        if (x == -1)
            throw GraphError("orientation has a directed cycle");
        for (; x != -1 && !stop; x = avail.next(x + 1)) {
            avail.reset(x);
            seq.push_back(x);
            for (EdgeId e : g.rotation(x))
                if (d.tail(g, e) == x && --indeg[d.head(g, e)] == 0)
                    avail.set(d.head(g, e));
            run();
            for (EdgeId e : g.rotation(x))
                if (d.tail(g, e) == x && indeg[d.head(g, e)]++ == 0)
                    avail.reset(d.head(g, e));
            seq.pop_back();
            avail.set(x);
        }
    }
};

// Articulation-free check on the subgraph induced by `in`.
bool induced_biconnected(const MaximalPlaneGraph &g, const std::vector<char> &in, VertexId root, int size) {
    const int n = g.num_vertices();
    std::vector<int> disc(n, -1), low(n, 0);
    struct Item {
        VertexId x;
        EdgeId via;
        int next;
    };
    std::vector<Item> st{{root, kNone, 0}};
    disc[root] = low[root] = 0;
    int timer = 1, root_children = 0;
    while (!st.empty()) {
        Item &it = st.back();
        if (it.next < g.degree(it.x)) {
            EdgeId e = g.rotation(it.x)[it.next++];
            VertexId y = g.other(e, it.x);
            if (!in[y] || e == it.via)
                continue;
            if (disc[y] == -1) {
                disc[y] = low[y] = timer++;
                if (it.x == root)
                    ++root_children;
                st.push_back({y, e, 0});
            } else {
                low[it.x] = std::min(low[it.x], disc[y]);
            }
            continue;
        }
        Item done = it;
        st.pop_back();
        if (st.empty())
            break;
        VertexId parent = st.back().x;
        low[parent] = std::min(low[parent], low[done.x]);
        if (parent != root && low[done.x] >= disc[parent])
            return false;
    }
    return timer == size && root_children <= 1;
}

} // namespace

std::uint64_t topological_sortings(const MaximalPlaneGraph &g, const CanonicalOrientation &d,
                                   const std::function<bool(std::span<const VertexId>)> &visit) {
    Sorter s(g, d, visit);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        ++s.indeg[d.head(g, e)];
    for (VertexId x = 0; x < g.num_vertices(); ++x)
        if (s.indeg[x] == 0)
            s.avail.set(x);
    s.seq.reserve(g.num_vertices());
    s.run();
    return s.count;
}

Verdict is_canonical_ordering(const MaximalPlaneGraph &g, std::span<const VertexId> seq) {
    const int n = g.num_vertices();
    if (static_cast<int>(seq.size()) != n)
        throw GraphError("sequence length differs from vertex count");
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        if (seq[i] < 0 || seq[i] >= n || rank[seq[i]] != -1)
            throw GraphError("sequence is not a permutation of the vertices");
        rank[seq[i]] = i;
    }
    if (seq[0] != g.u())
        return Verdict::fail("v1 ≠ u");
    if (seq[1] != g.v())
        return Verdict::fail("v2 ≠ v");
    if (seq[n - 1] != g.z())
        return Verdict::fail("vn ≠ z");

    std::vector<char> in(n, 0);
    in[seq[0]] = in[seq[1]] = 1;
    std::vector<int> on_path(n, -1);
    for (int k = 3; k <= n - 1; ++k) {
        in[seq[k - 1]] = 1;
        const std::string at = "k=" + std::to_string(k) + ": ";
        if (!induced_biconnected(g, in, seq[0], k))
            return Verdict::fail(at + "CO-1 violated, G_k is not biconnected");

        // outer face of G_k lies left of v -> u; the walk after u is the path u .. v
        std::vector<VertexId> path;
        EdgeId e = g.edge_between(g.v(), g.u());
        VertexId x = g.u();
        path.push_back(x);
        while (x != g.v()) {
            do
                e = g.prev_ccw(x, e);
            while (!in[g.other(e, x)]);
            x = g.other(e, x);
            path.push_back(x);
            if (static_cast<int>(path.size()) > k)
                return Verdict::fail(at + "outer boundary of G_k is not a simple cycle");
        }
        std::fill(on_path.begin(), on_path.end(), -1);
        for (int i = 0; i < static_cast<int>(path.size()); ++i)
            on_path[path[i]] = i;

        const VertexId next = seq[k];
        int lo = n, hi = -1, cnt = 0;
        for (EdgeId f : g.rotation(next)) {
            VertexId y = g.other(f, next);
            if (!in[y])
                continue;
            if (on_path[y] == -1)
                return Verdict::fail(at + "CO-2 violated, v" + std::to_string(k + 1) + " has neighbour " +
                                     std::to_string(y) + " off the outer path");
            lo = std::min(lo, on_path[y]);
            hi = std::max(hi, on_path[y]);
            ++cnt;
        }
        if (cnt < 2)
            return Verdict::fail(at + "CO-2 violated, v" + std::to_string(k + 1) + " has " + std::to_string(cnt) +
                                 " neighbour in G_k");
        if (hi - lo + 1 != cnt)
            return Verdict::fail(at + "CO-2 violated, neighbours of v" + std::to_string(k + 1) +
                                 " are not a subinterval of the outer path");

        // v_{k+1} must sit in the outer face: reachable from z outside G_k
        std::vector<char> seen(n, 0);
        std::vector<VertexId> todo{g.z()};
        seen[g.z()] = 1;
        while (!todo.empty()) {
            VertexId a = todo.back();
            todo.pop_back();
            for (EdgeId f : g.rotation(a)) {
                VertexId b = g.other(f, a);
                if (!in[b] && !seen[b]) {
                    seen[b] = 1;
                    todo.push_back(b);
                }
            }
        }
        if (!seen[next])
            return Verdict::fail(at + "CO-2 violated, v" + std::to_string(k + 1) + " is not in the outer face of G_k");
    }
    return Verdict::pass();
}

CanonicalOrientation orientation_of(const MaximalPlaneGraph &g, std::span<const VertexId> seq) {
    std::vector<int> rank(g.num_vertices(), 0);
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
        rank[seq[i]] = i;
    CanonicalOrientation d;
    d.outer = g.outer();
    d.a_to_b.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        d.a_to_b[e] = rank[g.edge(e).a] < rank[g.edge(e).b];
    return d;
}

} // namespace canon
