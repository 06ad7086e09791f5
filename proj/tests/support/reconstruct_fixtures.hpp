#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "hyperlip/geometry.hpp"

namespace hyperlip::fixture {

using Membership = std::function<bool(const Point&)>;

// Grid points of [lo, hi]^2 at the given step, split by membership.
struct Samples {
    std::vector<Point> inside;
    std::vector<Point> outside;
};

inline std::vector<Point> square_grid(double lo, double hi, double step) {
    std::vector<Point> g;
    const int count = static_cast<int>(std::lround((hi - lo) / step));
    for (int a = 0; a <= count; ++a)
        for (int b = 0; b <= count; ++b) g.push_back(Point{lo + a * step, lo + b * step});
    return g;
}

inline Samples split(const std::vector<Point>& grid, const Membership& member) {
    Samples s;
    for (const auto& p : grid) (member(p) ? s.inside : s.outside).push_back(p);
    return s;
}

inline bool in_unit_square(const Point& p) { return p[0] >= 0 && p[0] <= 1 && p[1] >= 0 && p[1] <= 1; }

// A non-product injective set: the square [0,2]^2 cut by x1 <= 1 + min(x2, 1).
inline bool in_notched_square(const Point& p) {
    return p[0] >= 0 && p[0] <= 2 && p[1] >= 0 && p[1] <= 2 && p[0] <= 1 + std::min(p[1], 1.0);
}

}  // namespace hyperlip::fixture
