#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperlip/boxset.hpp"
#include "hyperlip/metric_space.hpp"

namespace hyperlip {

/// Throws NotLipschitz (indices into B) unless
/// |values[a] - values[a']| <= d(A[a], A[a']) + tol for every pair.
void require_lipschitz_values(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                              std::span<const double> values, double tol = kDefaultTol);

/// Largest 1-Lipschitz extension: min over a in A of values(a) + d(a, b).
double mcshane_extend_component(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                std::span<const double> values, std::size_t b);

/// Smallest 1-Lipschitz extension: max over a in A of values(a) - d(a, b).
double mcshane_extend_component_lower(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                      std::span<const double> values, std::size_t b);

/// Extends phi: A -> Q to all of B: coordinatewise McShane extension into
/// l_inf^n followed by one retraction onto Q shared by every point of B.
/// Requires phi 1-Lipschitz and phi(a) in Q exactly.
std::vector<Point> extend_into_q(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                 std::span<const Point> phi, const BoxLipschitzSet& q,
                                 const RetractOptions& options);

struct MapLipschitzSummary {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    /// max over pairs of |f(b) - f(b')| - d(b, b').
    double worst_excess = 0.0;
};

MapLipschitzSummary check_map_lipschitz(const FiniteMetricSpace& space, std::span<const Point> image,
                                        double tol = kDefaultTol);

/// x -> (d(x, y) - d(z, y))_y, an isometric embedding into l_inf^{|X|}.
std::vector<Point> kuratowski_embed(const FiniteMetricSpace& space, std::size_t basepoint);

}  // namespace hyperlip
