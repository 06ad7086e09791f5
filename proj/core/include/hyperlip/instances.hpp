#pragma once

// Named sets used throughout the tests and the selftest command, and seeded
// random generators for property checks. All generators are deterministic
// for a fixed std::mt19937_64 state.

#include <cstddef>
#include <random>

#include "hyperlip/boxset.hpp"
#include "hyperlip/metric_space.hpp"

namespace hyperlip::instances {

/// Half-width of the interval on which coordinate_line is exactly affine.
inline constexpr double kLineReach = 16777216.0;  // 2^24

/// y -> slope * y + offset on the one-dimensional domain [-kLineReach, kLineReach],
/// built as a Min of two sup-norm cones. |slope| <= 1.
LipExpr coordinate_line(double slope, double offset = 0.0);

/// x1 = x2, x2 = 1 + x1. lambda = 1 and Q is empty; the cyclic iteration drifts.
BoxLipschitzSet drifting_pair();
/// x1 = x2, x2 = -x1. lambda = 1 and Q = {(0,0)}; the cyclic iteration cycles.
BoxLipschitzSet rotating_pair();
/// x1 = x2 / 2, x2 = x1 / 2. lambda = 1/2, Q = {(0,0)}.
BoxLipschitzSet halving_pair();
BoxLipschitzSet unit_cube(std::size_t n);

Point random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi);

/// Random tree of the given depth over l_inf^dim with lip_bound <= lambda.
LipExpr random_expr(std::mt19937_64& rng, std::size_t dim, double lambda, int depth);

/// Random consistent set with lambda(Q) == lambda. Bounds are (min(h, c), max(h, c')),
/// (h, h) or one-sided, so lower <= upper everywhere.
BoxLipschitzSet random_set(std::mt19937_64& rng, std::size_t n, double lambda, bool allow_infinite = true);

/// Random set with lambda(Q) == lambda that contains a sup-norm ball of radius
/// >= 1/4 around the origin.
BoxLipschitzSet random_set_around_origin(std::mt19937_64& rng, std::size_t n, double lambda);

/// Random lambda = 1 set whose finite bounds take values in [-range, range].
BoxLipschitzSet random_bounded_set(std::mt19937_64& rng, std::size_t n, double range);

/// Shortest-path closure of random edge weights in [0.5, 3].
FiniteMetricSpace random_metric_space(std::mt19937_64& rng, std::size_t m);

}  // namespace hyperlip::instances
