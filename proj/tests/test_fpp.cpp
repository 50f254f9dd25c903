#include <doctest.h>

#include "canon/fpp.hpp"
#include "canon/ice.hpp"
#include "canon/oracle.hpp"
#include "canon/orderings.hpp"
#include "support.hpp"

using namespace canon;
using namespace testing;

namespace {

std::vector<Ordering> all_sortings(const MaximalPlaneGraph &g, const CanonicalOrientation &d, std::size_t cap) {
    std::vector<Ordering> out;
    topological_sortings(g, d, [&](std::span<const VertexId> s) {
        out.emplace_back(s.begin(), s.end());
        return out.size() < cap;
    });
    return out;
}

void check_bounds(const MaximalPlaneGraph &g, const GridDrawing &p) {
    const std::int64_t n = g.num_vertices();
    for (const Point &q : p) {
        CHECK(q.x >= 0);
        CHECK(q.y >= 0);
        CHECK(q.x <= 2 * n - 4);
        CHECK(q.y <= n - 2);
    }
}

} // namespace

TEST_CASE("triangle and K4 coordinates") {
    auto t = fixture("triangle");
    CHECK(fpp_draw(t, Ordering{0, 1, 2}) == GridDrawing{{0, 0}, {2, 0}, {1, 1}});
    auto k = fixture("k4");
    // u, v, z, w by vertex id
    GridDrawing expect{{0, 0}, {4, 0}, {2, 2}, {2, 1}};
    CHECK(fpp_draw(k, Ordering{0, 1, 3, 2}) == expect);
    CHECK(fpp_draw_reference(k, Ordering{0, 1, 3, 2}) == expect);
    CHECK(canonical_drawing(k, canonical_orientations(k)[0]) == expect);
}

TEST_CASE("fast and reference shift methods agree and produce planar drawings") {
    auto corpus = small_corpus();
    for (int i = 0; i < 20; ++i)
        corpus.push_back(random_flipped(10 + 2 * i, 6 * (10 + 2 * i), 300 + i));
    for (const auto &g : corpus) {
        for (const auto &d : canonical_orientations(g)) {
            for (const auto &s : all_sortings(g, d, 4)) {
                auto p = fpp_draw(g, s);
                CHECK(p == fpp_draw_reference(g, s));
                CHECK(p[s[0]] == Point{0, 0});
                check_bounds(g, p);
                auto v = check_planar_straightline(g, p);
                INFO(v.diagnostic);
                CHECK(v);
            }
        }
    }
}

TEST_CASE("the first three vertices start at the fixed triangle") {
    for (const auto &g : small_corpus())
        for (const auto &d : canonical_orientations(g))
            for (const auto &s : all_sortings(g, d, 3)) {
                auto p = fpp_draw_reference(g, s, 3);
                CHECK(p[s[0]] == Point{0, 0});
                CHECK(p[s[1]] == Point{2, 0});
                CHECK(p[s[2]] == Point{1, 1});
            }
}

TEST_CASE("invalid orderings are rejected") {
    auto o = fixture("octahedron");
    CHECK_THROWS_AS(fpp_draw(o, Ordering{OU, OV, OA, OB, OC, OZ}), GraphError);
    CHECK_THROWS_AS(fpp_draw(o, Ordering{OU, OV, OB, OA, OC}), GraphError);
    CHECK_THROWS_AS(fpp_draw(o, Ordering{OV, OU, OB, OA, OC, OZ}), GraphError);
    CHECK_THROWS_AS(fpp_draw_reference(o, Ordering{OU, OV, OA, OB, OC, OZ}), GraphError);
}

TEST_CASE("every sorting of an orientation gives the same drawing") {
    for (int i = 0; i < 30; ++i) {
        auto g = random_flipped(9 + i % 5, 80, 900 + i);
        for (const auto &d : canonical_orientations(g)) {
            auto ss = all_sortings(g, d, 50);
            auto first = fpp_draw(g, ss[0]);
            CHECK(canonical_drawing(g, d) == first);
            for (const auto &s : ss)
                CHECK(fpp_draw(g, s) == first);
        }
    }
}

TEST_CASE("distinct orientations give distinct drawings") {
    for (int i = 0; i < 30; ++i) {
        auto g = random_flipped(9 + i % 5, 80, 1900 + i);
        std::set<GridDrawing> seen;
        auto ds = canonical_orientations(g);
        for (const auto &d : ds)
            seen.insert(canonical_drawing(g, d));
        CHECK(seen.size() == ds.size());
    }
}
