#include <doctest.h>

#include "canon/fpp.hpp"
#include "canon/ice.hpp"
#include "canon/oracle.hpp"
#include "support.hpp"

using namespace canon;
using namespace testing;

TEST_CASE("brute-force counts") {
    CHECK(brute_force_orientations(fixture("triangle")).size() == 1);
    CHECK(brute_force_orientations(fixture("k4")).size() == 1);
    CHECK(brute_force_orientations(fixture("octahedron")).size() == 2);
    CHECK(brute_force_orderings(fixture("triangle")) == OrderingSet{{0, 1, 2}});
}

TEST_CASE("parallel and serial brute force agree") {
    for (int i = 0; i < 10; ++i) {
        auto g = random_flipped(8, 40, 70 + i);
        CHECK(brute_force_orientations(g) == brute_force_orientations_serial(g));
    }
}

TEST_CASE("size guards") {
    auto g = random_stacked_triangulation(11, 1);
    CHECK_THROWS_AS(brute_force_orientations(g), SizeGuardError);
    CHECK_THROWS_AS(brute_force_orderings(random_stacked_triangulation(9, 1)), SizeGuardError);
    CHECK_NOTHROW(brute_force_orientations(random_stacked_triangulation(10, 1)));
}

TEST_CASE("orientation validator diagnostics") {
    auto k = fixture("k4");
    auto d = canonical_orientations(k)[0];
    CHECK(is_canonical_orientation(k, d));
    EdgeId vw = k.edge_between(1, 3);
    d.a_to_b[vw] = !d.a_to_b[vw];
    auto v = is_canonical_orientation(k, d);
    CHECK_FALSE(v);
    CHECK(v.diagnostic == "internal vertex 3 indegree 1");

    auto t = fixture("triangle");
    auto dt = canonical_orientations(t)[0];
    EdgeId uv = t.edge_between(0, 1);
    dt.a_to_b[uv] = !dt.a_to_b[uv];
    CHECK(is_canonical_orientation(t, dt).diagnostic == "u not a source");
}

TEST_CASE("segment checker") {
    auto k = fixture("k4");
    GridDrawing good{{0, 0}, {4, 0}, {2, 2}, {2, 1}};
    CHECK(check_planar_straightline(k, good));
    CHECK(check_planar_straightline_serial(k, good));

    // w on the open segment u-v
    GridDrawing bad{{0, 0}, {4, 0}, {2, 2}, {3, 0}};
    CHECK_FALSE(check_planar_straightline(k, bad));
    CHECK_FALSE(check_planar_straightline_serial(k, bad));

    // w outside the triangle: edge w-u crosses v-z
    GridDrawing crossing{{0, 0}, {4, 0}, {2, 2}, {5, 1}};
    CHECK_FALSE(check_planar_straightline(k, crossing));

    GridDrawing same{{0, 0}, {4, 0}, {2, 2}, {2, 2}};
    CHECK_FALSE(check_planar_straightline(k, same));

    auto t = fixture("triangle");
    CHECK(check_planar_straightline(t, GridDrawing{{0, 0}, {2, 0}, {1, 1}}));
    CHECK_FALSE(check_planar_straightline(t, GridDrawing{{0, 0}, {2, 0}, {1, 0}}));
}

TEST_CASE("parallel and serial segment checkers report the same first violation") {
    for (int i = 0; i < 20; ++i) {
        auto g = random_flipped(20, 100, 50 + i);
        auto p = canonical_drawing(g, canonical_orientations(g)[0]);
        CHECK(check_planar_straightline(g, p));
        p[i % g.num_vertices()].x += 3;
        p[(i + 5) % g.num_vertices()].y += 2;
        auto a = check_planar_straightline(g, p), b = check_planar_straightline_serial(g, p);
        CHECK(a.ok == b.ok);
        CHECK(a.diagnostic == b.diagnostic);
    }
}
