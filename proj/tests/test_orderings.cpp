#include <doctest.h>

#include <algorithm>

#include "canon/ice.hpp"
#include "canon/oracle.hpp"
#include "canon/orderings.hpp"
#include "support.hpp"

using namespace canon;
using namespace testing;

namespace {

std::vector<Ordering> sortings(const MaximalPlaneGraph &g, const CanonicalOrientation &d) {
    std::vector<Ordering> out;
    topological_sortings(g, d, [&](std::span<const VertexId> s) {
        out.emplace_back(s.begin(), s.end());
        return true;
    });
    return out;
}

// Every permutation that respects all edge directions.
std::set<Ordering> brute_extensions(const MaximalPlaneGraph &g, const CanonicalOrientation &d) {
    Ordering p(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i)
        p[i] = i;
    std::set<Ordering> out;
    do {
        std::vector<int> rank(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
            rank[p[i]] = static_cast<int>(i);
        bool ok = true;
        for (EdgeId e = 0; e < g.num_edges() && ok; ++e)
            ok = rank[d.tail(g, e)] < rank[d.head(g, e)];
        if (ok)
            out.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

TEST_CASE("sortings of the fixed small cases") {
    auto t = fixture("triangle");
    CHECK(sortings(t, canonical_orientations(t)[0]) == std::vector<Ordering>{{0, 1, 2}});
    auto k = fixture("k4");
    CHECK(sortings(k, canonical_orientations(k)[0]) == std::vector<Ordering>{{0, 1, 3, 2}});

    auto o = fixture("octahedron");
    for (const auto &d : canonical_orientations(o)) {
        EdgeId ac = o.edge_between(OA, OC);
        if (d.tail(o, ac) != OA)
            continue;
        CHECK(d.tail(o, o.edge_between(OB, OA)) == OB);
        CHECK(d.tail(o, o.edge_between(OB, OC)) == OB);
        CHECK(sortings(o, d) == std::vector<Ordering>{{OU, OV, OB, OA, OC, OZ}});
    }
}

TEST_CASE("sortings equal brute-force linear extensions, in lexicographic order") {
    for (const auto &g : small_corpus()) {
        for (const auto &d : canonical_orientations(g)) {
            auto got = sortings(g, d);
            CHECK(std::is_sorted(got.begin(), got.end()));
            std::set<Ordering> set(got.begin(), got.end());
            CHECK(set.size() == got.size());
            CHECK(set == brute_extensions(g, d));
            for (const auto &s : got) {
                CHECK(is_canonical_ordering(g, s));
                CHECK(orientation_of(g, s) == d);
            }
        }
    }
}

TEST_CASE("visitor can stop early") {
    auto g = random_flipped(30, 300, 0);
    for (const auto &d : canonical_orientations(g)) {
        int seen = 0;
        auto total = topological_sortings(g, d, [&](std::span<const VertexId>) { return ++seen < 1; });
        CHECK(total == 1);
        CHECK(seen == 1);
    }
}

TEST_CASE("cyclic input is rejected") {
    auto g = fixture("triangle");
    CanonicalOrientation d{g.outer(), {}};
    d.a_to_b.resize(3);
    // 0 -> 1 -> 2 -> 0
    for (EdgeId e = 0; e < 3; ++e) {
        Edge ed = g.edge(e);
        d.a_to_b[e] = (ed.b == (ed.a + 1) % 3);
    }
    CHECK_THROWS_AS(topological_sortings(g, d, [](std::span<const VertexId>) { return true; }), GraphError);
}

TEST_CASE("validator diagnostics") {
    auto k = fixture("k4");
    CHECK(is_canonical_ordering(k, Ordering{0, 1, 3, 2}));
    auto bad = is_canonical_ordering(k, Ordering{0, 3, 1, 2});
    CHECK_FALSE(bad);
    CHECK(bad.diagnostic == "v2 ≠ v");
    CHECK_FALSE(is_canonical_ordering(k, Ordering{1, 0, 3, 2}));
    CHECK_FALSE(is_canonical_ordering(k, Ordering{0, 1, 2, 3}));
    CHECK_THROWS_AS(is_canonical_ordering(k, Ordering{0, 1, 1, 2}), GraphError);
    CHECK_THROWS_AS(is_canonical_ordering(k, Ordering{0, 1, 2}), GraphError);

    auto o = fixture("octahedron");
    auto v = is_canonical_ordering(o, Ordering{OU, OV, OA, OB, OC, OZ});
    CHECK_FALSE(v);
    CHECK(v.diagnostic.find("k=3") != std::string::npos);
}

TEST_CASE("ordering enumeration equals brute force for n <= 7") {
    for (const auto &g : small_corpus()) {
        if (g.num_vertices() > 7)
            continue;
        std::set<Ordering> got;
        std::size_t count = 0;
        for (const auto &d : canonical_orientations(g))
            for (auto &s : sortings(g, d)) {
                got.insert(s);
                ++count;
            }
        CHECK(got.size() == count);
        CHECK(got == brute_force_orderings(g));
    }
    CHECK(brute_force_orderings(fixture("octahedron")).size() == 2);
    CHECK(brute_force_orderings(fixture("k4")) == OrderingSet{{0, 1, 3, 2}});
}

TEST_CASE("orientation_of on the triangle") {
    auto t = fixture("triangle");
    auto d = orientation_of(t, Ordering{0, 1, 2});
    CHECK(d == canonical_orientations(t)[0]);
}
