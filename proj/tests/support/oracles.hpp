#pragma once

// Brute-force reference computations. These deliberately avoid the library's
// code paths: each one evaluates a definition directly.

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

#include "hyperlip/geometry.hpp"

namespace hyperlip {

// gtest printer
inline void PrintTo(const Point& p, std::ostream* os) {
    *os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) *os << (i ? ", " : "") << p[i];
    *os << ')';
}

}  // namespace hyperlip

namespace hyperlip::oracle {

inline double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::fabs(a[i] - b[i]));
    return d;
}

inline double sup_distance(const Point& a, const Point& b) { return sup_distance(a.vec(), b.vec()); }

/// p([a,b], x) as the median of {a, x, b} for a <= b.
inline double clamp(double a, double b, double x) {
    double v[3] = {a, x, b};
    std::sort(v, v + 3);
    return v[1];
}

/// Smallest candidate eps (a pairwise distance) with A in U_eps(B) and B in U_eps(A).
inline double hausdorff(const std::vector<Point>& a, const std::vector<Point>& b) {
    std::vector<double> candidates;
    for (const auto& p : a)
        for (const auto& q : b) candidates.push_back(sup_distance(p, q));
    std::sort(candidates.begin(), candidates.end());
    auto covered = [](const std::vector<Point>& from, const std::vector<Point>& to, double eps) {
        for (const auto& p : from) {
            bool near = false;
            for (const auto& q : to) near = near || sup_distance(p, q) <= eps;
            if (!near) return false;
        }
        return true;
    };
    for (double eps : candidates) {
        if (covered(a, b, eps) && covered(b, a, eps)) return eps;
    }
    return std::numeric_limits<double>::infinity();
}

/// sup{eps : exists p in S with |x-p| + |x-q| >= |p-q| + eps for all q in S},
/// found by bisection on the predicate.
inline double epsilon_by_bisection(const std::vector<Point>& inside, const Point& x, int iterations = 200) {
    auto feasible = [&](double eps) {
        for (const auto& p : inside) {
            bool all = true;
            for (const auto& q : inside) {
                if (sup_distance(x, p) + sup_distance(x, q) < sup_distance(p, q) + eps) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
        return false;
    };
    double lo = 0.0, hi = 1.0;
    while (feasible(hi)) hi *= 2.0;
    for (int k = 0; k < iterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

}  // namespace hyperlip::oracle
