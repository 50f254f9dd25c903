#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "canon/geometry.hpp"
#include "canon/plane_graph.hpp"

namespace canon {

// Runs the command line tool. Returns the process exit status:
// 0 success, 1 invalid input or usage, 2 size guard exceeded.
int run_cli(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

// Per-output cost of the enumerator on one graph.
struct DelayReport {
    int n = 0;
    std::uint64_t outputs = 0;
    std::uint64_t setup_touches = 0;
    // surgery record touches between consecutive outputs; the first output counts from setup
    std::uint64_t max_touches = 0;
    std::uint64_t median_touches = 0;
    double max_seconds = 0;
    double median_seconds = 0;
};

// Enumerates up to limit orientations (0 means all).
DelayReport measure_delay(const MaximalPlaneGraph &g, std::uint64_t limit);

std::string drawing_svg(const MaximalPlaneGraph &g, const GridDrawing &p);

} // namespace canon
