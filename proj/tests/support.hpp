#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "canon/plane_graph.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at tests/fixtures"
#endif

namespace testing {

using namespace canon;

inline std::string read_text(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

inline std::string fixture_text(const std::string &name) {
    return read_text(std::string(FIXTURE_DIR) + "/" + name + ".json");
}

inline MaximalPlaneGraph fixture(const std::string &name) { return parse_graph(fixture_text(name)); }

inline const std::vector<std::string> &fixture_names() {
    static const std::vector<std::string> names{"triangle",      "k4",           "k5e_z",
                                                "k5e_u",         "k5e_v",        "stack6_nested",
                                                "stack6_spread", "stack6_chain", "octahedron",
                                                "octahedron_stacked"};
    return names;
}

// Octahedron vertex names as laid out in the fixture.
enum Octa { OU = 0, OV = 1, OZ = 2, OA = 3, OB = 4, OC = 5 };

// Stacked triangulation followed by random flips of internal edges. Stacked graphs
// have a single canonical orientation, flips give a richer corpus.
inline MaximalPlaneGraph random_flipped(int n, int flips, std::uint64_t seed) {
    return random_flipped_triangulation(n, flips, seed);
}

// Corpus for oracle comparisons: fixtures, stacked and flipped random graphs, n <= 8.
inline std::vector<MaximalPlaneGraph> small_corpus() {
    std::vector<MaximalPlaneGraph> out;
    for (const auto &name : fixture_names())
        out.push_back(fixture(name));
    for (int i = 0; i < 50; ++i)
        out.push_back(random_stacked_triangulation(3 + i % 6, 1000 + i));
    for (int i = 0; i < 50; ++i)
        out.push_back(random_flipped(6 + i % 3, 40, 2000 + i));
    return out;
}

} // namespace testing
