#include "hyperlip/instances.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlip/errors.hpp"

namespace hyperlip::instances {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

std::size_t pick(std::mt19937_64& rng, std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
}

Sign random_sign(std::mt19937_64& rng) { return pick(rng, 2) == 0 ? Sign::Plus : Sign::Minus; }

LipExpr random_leaf(std::mt19937_64& rng, std::size_t dim, double lambda) {
    switch (pick(rng, 3)) {
        case 0: return LipExpr::constant(uniform(rng, -2.0, 2.0));
        case 1:
            return LipExpr::dist_cone(random_point(rng, dim, -2.0, 2.0), uniform(rng, -2.0, 2.0),
                                      uniform(rng, 0.0, lambda), random_sign(rng));
        default: {
            std::vector<LipSample> samples;
            const std::size_t count = 1 + pick(rng, 3);
            for (std::size_t k = 0; k < count; ++k) {
                samples.push_back({random_point(rng, dim, -2.0, 2.0), uniform(rng, -1.0, 1.0)});
            }
            return LipExpr::mcshane(std::move(samples), uniform(rng, 0.0, lambda),
                                    pick(rng, 2) == 0 ? McShaneMode::Inf : McShaneMode::Sup);
        }
    }
}

// Guarantees lip_bound == lambda by mixing in one cone of exactly that slope.
LipExpr with_full_slope(std::mt19937_64& rng, LipExpr h, std::size_t dim, double lambda) {
    LipExpr cone = LipExpr::dist_cone(random_point(rng, dim, -1.0, 1.0), uniform(rng, -0.5, 0.5), lambda,
                                      random_sign(rng));
    return pick(rng, 2) == 0 ? LipExpr::min({std::move(h), std::move(cone)})
                             : LipExpr::max({std::move(h), std::move(cone)});
}

}  // namespace

LipExpr coordinate_line(double slope, double offset) {
    if (std::abs(slope) > 1.0) throw InputError("coordinate_line: |slope| must be <= 1");
    const double s = std::abs(slope);
    const double m = kLineReach;
    if (slope >= 0.0) {
        return LipExpr::min({LipExpr::dist_cone(Point{-m}, offset - s * m, s, Sign::Plus),
                             LipExpr::dist_cone(Point{m}, offset + s * m, s, Sign::Minus)});
    }
    return LipExpr::min({LipExpr::dist_cone(Point{m}, offset - s * m, s, Sign::Plus),
                         LipExpr::dist_cone(Point{-m}, offset + s * m, s, Sign::Minus)});
}

BoxLipschitzSet drifting_pair() {
    return BoxLipschitzSet({coordinate_line(1.0), coordinate_line(1.0, 1.0)},
                           {coordinate_line(1.0), coordinate_line(1.0, 1.0)});
}

BoxLipschitzSet rotating_pair() {
    return BoxLipschitzSet({coordinate_line(1.0), coordinate_line(-1.0)},
                           {coordinate_line(1.0), coordinate_line(-1.0)});
}

BoxLipschitzSet halving_pair() {
    return BoxLipschitzSet({coordinate_line(0.5), coordinate_line(0.5)},
                           {coordinate_line(0.5), coordinate_line(0.5)});
}

BoxLipschitzSet unit_cube(std::size_t n) {
    return BoxLipschitzSet(std::vector<LipExpr>(n, LipExpr::constant(0.0)),
                           std::vector<LipExpr>(n, LipExpr::constant(1.0)));
}

Point random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
    std::vector<double> c(n);
    for (auto& v : c) v = uniform(rng, lo, hi);
    return Point(std::move(c));
}

LipExpr random_expr(std::mt19937_64& rng, std::size_t dim, double lambda, int depth) {
    if (depth <= 0 || pick(rng, 4) == 0) return random_leaf(rng, dim, lambda);
    switch (pick(rng, 3)) {
        case 0:
        case 1: {
            std::vector<LipExpr> children;
            const std::size_t count = 2 + pick(rng, 2);
            for (std::size_t k = 0; k < count; ++k) children.push_back(random_expr(rng, dim, lambda, depth - 1));
            return pick(rng, 2) == 0 ? LipExpr::min(std::move(children)) : LipExpr::max(std::move(children));
        }
        default:
            return LipExpr::blend(random_expr(rng, dim, lambda, depth - 1), uniform(rng, 0.0, 1.0),
                                  uniform(rng, -2.0, 2.0));
    }
}

BoxLipschitzSet random_set(std::mt19937_64& rng, std::size_t n, double lambda, bool allow_infinite) {
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        LipExpr h = random_expr(rng, n - 1, lambda, 2);
        if (i == 0 && n > 1) h = with_full_slope(rng, std::move(h), n - 1, lambda);
        const std::size_t pattern = pick(rng, allow_infinite ? 5 : 2);
        const LipExpr lo_cap = LipExpr::constant(uniform(rng, -1.5, 0.5));
        const LipExpr hi_cap = LipExpr::constant(uniform(rng, -0.5, 1.5));
        switch (pattern) {
            case 0:
                lower.push_back(LipExpr::min({h, lo_cap}));
                upper.push_back(LipExpr::max({h, hi_cap}));
                break;
            case 1:
                lower.push_back(h);
                upper.push_back(h);
                break;
            case 2:
                lower.push_back(LipExpr::infinite(Sign::Minus));
                upper.push_back(h);
                break;
            case 3:
                lower.push_back(h);
                upper.push_back(LipExpr::infinite(Sign::Plus));
                break;
            default:
                lower.push_back(LipExpr::min({h, lo_cap}));
                upper.push_back(LipExpr::infinite(Sign::Plus));
                break;
        }
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

BoxLipschitzSet random_set_around_origin(std::mt19937_64& rng, std::size_t n, double lambda) {
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        LipExpr h = random_expr(rng, n - 1, lambda, 2);
        if (i == 0 && n > 1) h = with_full_slope(rng, std::move(h), n - 1, lambda);
        // Bounds at most -1/2 (resp. at least 1/2) at the origin and lambda <= 1
        // keep the ball of radius 1/4 inside Q.
        const std::size_t pattern = pick(rng, 4);
        LipExpr lo = LipExpr::min({h, LipExpr::constant(uniform(rng, -2.0, -0.5))});
        LipExpr hi = LipExpr::max({h, LipExpr::constant(uniform(rng, 0.5, 2.0))});
        lower.push_back(pattern == 1 ? LipExpr::infinite(Sign::Minus) : lo);
        upper.push_back(pattern == 2 ? LipExpr::infinite(Sign::Plus) : hi);
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

BoxLipschitzSet random_bounded_set(std::mt19937_64& rng, std::size_t n, double range) {
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        LipExpr h = random_expr(rng, n - 1, 1.0, 2);
        if (n > 1) h = with_full_slope(rng, std::move(h), n - 1, 1.0);
        h = clamp_values(h, -range, range);
        if (pick(rng, 2) == 0) {
            lower.push_back(h);
            upper.push_back(h);
        } else {
            lower.push_back(LipExpr::min({h, LipExpr::constant(uniform(rng, -range, 0.0))}));
            upper.push_back(LipExpr::max({h, LipExpr::constant(uniform(rng, 0.0, range))}));
        }
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

FiniteMetricSpace random_metric_space(std::mt19937_64& rng, std::size_t m) {
    DistanceMatrix d(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) d[i][j] = d[j][i] = uniform(rng, 0.5, 3.0);
    }
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    return FiniteMetricSpace(d);
}

}  // namespace hyperlip::instances
