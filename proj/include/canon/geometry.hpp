#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace canon {

struct Point {
    std::int64_t x = 0, y = 0;
    auto operator<=>(const Point &) const = default;
};

// Indexed by vertex id.
using GridDrawing = std::vector<Point>;

} // namespace canon
