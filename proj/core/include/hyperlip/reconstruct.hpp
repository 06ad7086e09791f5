#pragma once

// Recovers the 2n bounding functions of an injective set Q in l_inf^n from
// samples. Every exterior point x is not extremal for d_x restricted to Q,
// with margin eps(x); an axis cone with apex shifted by a * eps(x) toward Q
// contains x in its interior and misses Q. Each cone contributes one
// sup-norm distance function to an upper bound (Min) or lower bound (Max).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyperlip/boxset.hpp"
#include "hyperlip/errors.hpp"

namespace hyperlip {

inline constexpr double kDefaultConeShrink = 0.1;

struct EpsilonWitness {
    double epsilon = 0.0;
    Point p;
};

/// eps(x) = max_p min_q (|x - p| + |x - q| - |p - q|) over the inside sample,
/// and the first maximizing p. Throws InputError if eps <= 0 (x is in Q).
EpsilonWitness epsilon_of(std::span<const Point> inside, const Point& x);

/// Axis i of largest |x_i - p_i| (smallest index on ties); the cone opens
/// away from p with apex x -/+ a * eps * e_i.
ConeDescriptor choose_cone(const Point& x, const Point& p, double epsilon, double a);

struct ReconstructionConfig {
    double a = kDefaultConeShrink;
    std::vector<Point> inside;
    std::vector<Point> outside;
    /// Optional ground truth, used to validate the samples.
    std::function<bool(const Point&)> membership;
};

struct ExteriorCone {
    Point x;
    double epsilon = 0.0;
    Point p;
    ConeDescriptor cone;
};

struct Reconstruction {
    BoxLipschitzSet set;
    std::vector<ExteriorCone> cones;
};

class ConeIntersectsSample : public ContractError {
public:
    ConeIntersectsSample(Point exterior, Point member);
    Point exterior;
    Point member;
};

Reconstruction synthesize_bounds(const ReconstructionConfig& config, std::size_t n);

struct ReconstructionReport {
    /// Outside Q but satisfying every synthesized inequality.
    std::vector<Point> false_inside;
    /// Inside Q but violating a synthesized inequality.
    std::vector<Point> false_outside;
    /// Points where a synthesized lower bound exceeds the upper bound.
    std::vector<Point> inconsistent;

    bool exact() const noexcept { return false_inside.empty() && false_outside.empty() && inconsistent.empty(); }
};

ReconstructionReport verify_reconstruction(const std::function<bool(const Point&)>& membership,
                                           const BoxLipschitzSet& reconstructed, std::span<const Point> grid);

}  // namespace hyperlip
