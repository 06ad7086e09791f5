#pragma once

// Isbell's construction on a finite metric space X:
//   Delta(X) = { f : f(x) + f(y) >= d(x,y) for all x, y }
//   E(X)     = minimal elements of Delta(X)
//            = { f : f(x) = max_y (d(x,y) - f(y)) for all x }.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperlip/metric_space.hpp"

namespace hyperlip {

bool in_delta(const FiniteMetricSpace& space, std::span<const double> f, double tol = kDefaultTol);

/// Requires f in Delta(X) (within tol); throws InputError otherwise.
bool is_extremal(const FiniteMetricSpace& space, std::span<const double> f, double tol = kDefaultTol);

/// For an extremal f: the index x with f = d_x if f has a zero (within tol),
/// nullopt if f is positive. Throws ContractError if f has a zero but is
/// not a distance function, which cannot happen for extremal f.
std::optional<std::size_t> classify_extremal_zero(const FiniteMetricSpace& space, std::span<const double> f,
                                                  double tol = kDefaultTol);

/// X plus one point x_f at distance f(x) from each x. Requires f in Delta(X),
/// f 1-Lipschitz and f > 0.
FiniteMetricSpace attach_point(const FiniteMetricSpace& space, std::span<const double> f);

/// Grid scan of [0, diam X]^|X| with the given step: every grid point within
/// resolution/2 of both Delta(X) and the extremality equation, plus the rows
/// d_x snapped to the grid. Sorted lexicographically. |X| <= 5 and at most
/// 1e8 candidates.
std::vector<std::vector<double>> enumerate_extremal_grid(const FiniteMetricSpace& space, double resolution);

}  // namespace hyperlip
