#include <doctest.h>

#include <algorithm>
#include <map>

#include "support.hpp"

using namespace canon;
using namespace testing;

namespace {

// Independent face walk on neighbour lists: the face left of x->y continues to
// y->w where w precedes x in the ccw rotation of y.
std::vector<std::vector<int>> walk_faces(const std::vector<std::vector<int>> &rot) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> out;
    for (int x = 0; x < static_cast<int>(rot.size()); ++x)
        for (int y : rot[x]) {
            if (seen.count({x, y}))
                continue;
            std::vector<int> face;
            int a = x, b = y;
            while (!seen.count({a, b})) {
                seen.insert({a, b});
                face.push_back(a);
                const auto &r = rot[b];
                int i = static_cast<int>(std::find(r.begin(), r.end(), a) - r.begin());
                int w = r[(i + r.size() - 1) % r.size()];
                a = b;
                b = w;
            }
            out.push_back(face);
        }
    return out;
}

std::vector<int> normalized(std::vector<int> f) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return f;
}

} // namespace

TEST_CASE("parse: triangle and K4 sizes") {
    auto t = fixture("triangle");
    CHECK(t.num_vertices() == 3);
    CHECK(t.num_edges() == 3);
    CHECK(faces(t).size() == 2);
    auto k = fixture("k4");
    CHECK(k.num_edges() == 6);
    CHECK(faces(k).size() == 4);
}

TEST_CASE("parse: edge ids follow document order") {
    auto g = parse_graph(R"({"n":4,"rotations":[[1,3,2],[2,3,0],[0,3,1],[0,1,2]],"outer":[0,1,2]})");
    REQUIRE(g.num_edges() == 6);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 3});
    CHECK(g.edge(2) == Edge{0, 2});
    CHECK(g.edge(3) == Edge{1, 2});
    CHECK(g.edge(4) == Edge{1, 3});
    CHECK(g.edge(5) == Edge{2, 3});
}

TEST_CASE("parse: clockwise outer triple is rejected") {
    auto text = fixture_text("k4");
    auto pos = text.find("\"outer\": [0, 1, 2]");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "\"outer\": [0, 2, 1]");
    CHECK_THROWS_WITH_AS(parse_graph(text), doctest::Contains("outer face orientation"), GraphError);
}

TEST_CASE("parse: the oracle face walk agrees on orientation of the outer triple") {
    auto g = fixture("k4");
    auto fs = walk_faces(g.neighbor_rotations());
    std::set<std::vector<int>> norm;
    for (auto &f : fs)
        norm.insert(normalized(f));
    // (u, z, v) is traced by the left-face walk, so (u, v, z) reads ccw around the outside
    CHECK(norm.count({0, 2, 1}) == 1);
    CHECK(norm.count({0, 1, 2}) == 0);
}

TEST_CASE("parse: malformed documents") {
    CHECK_THROWS_WITH_AS(parse_graph("{not json"), doctest::Contains("syntax error"), GraphError);
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"rotations":[[1,2],[2,0]],"outer":[0,1,2]})"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"rotations":[[0,1,2],[2,0],[0,1]],"outer":[0,1,2]})"),
                         doctest::Contains("loop"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":3,"rotations":[[1,1,2],[2,0],[0,1]],"outer":[0,1,2]})"),
                         doctest::Contains("parallel"), GraphError);
    // asymmetric: 0 lists 2 but 2 does not list 0
    CHECK_THROWS_AS(parse_graph(R"({"n":3,"rotations":[[1,2],[2,0],[1]],"outer":[0,1,2]})"), GraphError);
    // K4 minus an edge has the wrong edge count
    CHECK_THROWS_AS(parse_graph(R"({"n":4,"rotations":[[1,3],[2,3,0],[3,1],[0,1,2]],"outer":[0,1,2]})"), GraphError);
    // outer triple that is not a face
    CHECK_THROWS_WITH_AS(parse_graph(R"({"n":4,"rotations":[[1,3,2],[2,3,0],[0,3,1],[0,1,2]],"outer":[0,1,3]})"),
                         doctest::Contains("face"), GraphError);
}

TEST_CASE("parse: a rotation system that is not planar is rejected") {
    // K4 with one rotation reversed gives a toroidal map: face count differs from 2n-4
    CHECK_THROWS_AS(parse_graph(R"({"n":4,"rotations":[[1,2,3],[2,3,0],[0,3,1],[0,1,2]],"outer":[0,1,2]})"),
                    GraphError);
}

TEST_CASE("faces match the independent walk on every fixture") {
    for (const auto &name : fixture_names()) {
        CAPTURE(name);
        auto g = fixture(name);
        auto fs = faces(g);
        CHECK(fs.size() == static_cast<std::size_t>(2 * g.num_vertices() - 4));
        std::set<std::vector<int>> oracle;
        for (auto &f : walk_faces(g.neighbor_rotations())) {
            CHECK(f.size() == 3);
            oracle.insert(normalized(f));
        }
        std::set<std::vector<int>> got;
        for (auto &t : fs)
            got.insert({t[0], t[1], t[2]});
        CHECK(got == oracle);
    }
    CHECK(faces(fixture("octahedron")).size() == 8);
}

TEST_CASE("rootings: 4n-8 distinct values") {
    CHECK(enumerate_rootings(fixture("triangle")).size() == 4);
    CHECK(enumerate_rootings(fixture("k4")).size() == 8);
    CHECK(enumerate_rootings(fixture("octahedron")).size() == 16);
    for (const auto &name : fixture_names()) {
        auto g = fixture(name);
        auto rs = enumerate_rootings(g);
        std::set<std::pair<Triple, bool>> distinct;
        for (auto &r : rs)
            distinct.insert({r.face, r.reflected});
        CHECK(distinct.size() == rs.size());
    }
}

TEST_CASE("reroot: identity, reflection and inverse") {
    auto k = fixture("k4");
    CHECK(reroot(k, Rooting{k.outer(), false}) == k);
    for (const auto &name : fixture_names()) {
        CAPTURE(name);
        auto g = fixture(name);
        for (const Rooting &r : enumerate_rootings(g)) {
            auto h = reroot(g, r);
            CHECK(h.outer() == r.face);
            CHECK(h.edges() == g.edges());
            CHECK(faces(h).size() == faces(g).size());
            for (VertexId x = 0; x < g.num_vertices(); ++x) {
                std::vector<EdgeId> a(g.rotation(x).begin(), g.rotation(x).end());
                std::vector<EdgeId> b(h.rotation(x).begin(), h.rotation(x).end());
                if (r.reflected)
                    std::reverse(b.begin(), b.end());
                CHECK(a == b);
            }
            CHECK(reroot(h, inverse_rooting(g, r)) == g);
        }
    }
}

TEST_CASE("reroot: faces of the octahedron are preserved up to orientation") {
    auto g = fixture("octahedron");
    auto as_sets = [](const std::vector<Triple> &fs) {
        std::set<std::set<int>> out;
        for (auto &f : fs)
            out.insert({f[0], f[1], f[2]});
        return out;
    };
    for (const Rooting &r : enumerate_rootings(g))
        CHECK(as_sets(faces(reroot(g, r))) == as_sets(faces(g)));
}

TEST_CASE("stacked generator") {
    auto t = random_stacked_triangulation(3, 99);
    CHECK(t.num_edges() == 3);
    auto k = random_stacked_triangulation(4, 5);
    CHECK(k.num_edges() == 6);
    for (VertexId x = 0; x < 4; ++x)
        CHECK(k.degree(x) == 3);
    auto big = random_stacked_triangulation(100, 7);
    CHECK(big.num_vertices() == 100);
    CHECK(big.num_edges() == 3 * 100 - 6);
    CHECK(faces(big).size() == 196);
    CHECK(parse_graph(to_document(big)) == big);
    CHECK(random_stacked_triangulation(30, 3) == random_stacked_triangulation(30, 3));
    CHECK_FALSE(random_stacked_triangulation(30, 3) == random_stacked_triangulation(30, 4));
}

TEST_CASE("flip generator used by the corpus yields valid graphs") {
    for (int i = 0; i < 20; ++i) {
        auto g = random_flipped(12, 60, i);
        CHECK(faces(g).size() == 20);
    }
}
