#include "hyperlip/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "hyperlip/parallel.hpp"

namespace hyperlip {

ConeIntersectsSample::ConeIntersectsSample(Point x, Point q)
    : ContractError("a chosen cone contains an inside sample"), exterior(std::move(x)), member(std::move(q)) {}

EpsilonWitness epsilon_of(std::span<const Point> inside, const Point& x) {
    if (inside.empty()) throw InputError("epsilon_of: empty inside sample");
    std::vector<double> to_x(inside.size());
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < inside.size(); ++k) {
        to_x[k] = sup_dist(x, inside[k]);
        nearest = std::min(nearest, to_x[k]);
    }

    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_p = 0;
    for (std::size_t p = 0; p < inside.size(); ++p) {
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t q = 0; q < inside.size() && worst > best; ++q) {
            worst = std::min(worst, to_x[p] + to_x[q] - sup_dist(inside[p], inside[q]));
        }
        if (worst > best) {
            best = worst;
            best_p = p;
        }
    }
    if (!(best > 0.0)) throw InputError("epsilon_of: x has no positive margin (it lies in Q)");
    if (best > 2.0 * nearest + kDefaultTol) throw ContractError("epsilon_of: eps(x) exceeds 2 d(x, Q)");
    return {best, inside[best_p]};
}

ConeDescriptor choose_cone(const Point& x, const Point& p, double epsilon, double a) {
    if (x.size() != p.size()) throw DimensionMismatch(x.size(), p.size());
    if (!(a > 0.0 && a < 0.125)) throw InputError("cone shrink constant must satisfy 0 < a < 1/8");
    if (x == p) throw InputError("choose_cone: x equals p");
    std::size_t axis = 0;
    double largest = -1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double gap = std::abs(x[i] - p[i]);
        if (gap > largest) {
            largest = gap;
            axis = i;
        }
    }
    const Sign sign = x[axis] - p[axis] > 0.0 ? Sign::Plus : Sign::Minus;
    Point apex = x;
    apex[axis] -= sign_value(sign) * a * epsilon;
    ConeDescriptor cone{std::move(apex), axis, sign};
    if (!cone_contains(cone, x, true)) throw ContractError("choose_cone: x is not interior to its cone");
    return cone;
}

Reconstruction synthesize_bounds(const ReconstructionConfig& config, std::size_t n) {
    if (n == 0) throw InputError("synthesize_bounds: n must be >= 1");
    if (!(config.a > 0.0 && config.a < 0.125)) throw InputError("cone shrink constant must satisfy 0 < a < 1/8");
    if (config.inside.empty()) throw InputError("synthesize_bounds: empty inside sample");
    for (const auto& q : config.inside) {
        if (q.size() != n) throw DimensionMismatch(n, q.size());
        if (config.membership && !config.membership(q)) throw InputError("inside sample is not a member of Q");
    }
    for (const auto& x : config.outside) {
        if (x.size() != n) throw DimensionMismatch(n, x.size());
        if (config.membership && config.membership(x)) throw InputError("exterior sample is a member of Q");
    }

    std::vector<std::optional<ExteriorCone>> slots(config.outside.size());
    parallel_for_chunks(config.outside.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const Point& x = config.outside[k];
            EpsilonWitness w = epsilon_of(config.inside, x);
            ConeDescriptor cone = choose_cone(x, w.p, w.epsilon, config.a);
            for (const auto& q : config.inside) {
                if (cone_contains(cone, q)) throw ConeIntersectsSample(x, q);
            }
            slots[k] = ExteriorCone{x, w.epsilon, std::move(w.p), std::move(cone)};
        }
    });

    std::vector<std::vector<LipExpr>> upper_family(n), lower_family(n);
    std::vector<ExteriorCone> cones;
    cones.reserve(slots.size());
    for (auto& slot : slots) {
        ExteriorCone& c = *slot;
        const std::size_t i = c.cone.axis;
        const double shift = config.a * c.epsilon;
        if (c.cone.sign == Sign::Plus) {
            upper_family[i].push_back(LipExpr::dist_cone(hat(c.x, i), c.x[i] - shift, 1.0, Sign::Plus));
        } else {
            lower_family[i].push_back(LipExpr::dist_cone(hat(c.x, i), c.x[i] + shift, 1.0, Sign::Minus));
        }
        cones.push_back(std::move(c));
    }

    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < n; ++i) {
        lower.push_back(lower_family[i].empty() ? LipExpr::infinite(Sign::Minus)
                                                : LipExpr::max(std::move(lower_family[i])));
        upper.push_back(upper_family[i].empty() ? LipExpr::infinite(Sign::Plus)
                                                : LipExpr::min(std::move(upper_family[i])));
    }
    return {BoxLipschitzSet(std::move(lower), std::move(upper)), std::move(cones)};
}

ReconstructionReport verify_reconstruction(const std::function<bool(const Point&)>& membership,
                                           const BoxLipschitzSet& reconstructed, std::span<const Point> grid) {
    enum class Outcome { Match, FalseInside, FalseOutside, Inconsistent };
    std::vector<Outcome> outcome(grid.size(), Outcome::Match);
    parallel_for_chunks(grid.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const bool truth = membership(grid[k]);
            try {
                const bool inside = violation(reconstructed, grid[k]) == 0.0;
                if (truth && !inside) outcome[k] = Outcome::FalseOutside;
                if (!truth && inside) outcome[k] = Outcome::FalseInside;
            } catch (const InconsistentBounds&) {
                outcome[k] = Outcome::Inconsistent;
            }
        }
    });
    ReconstructionReport report;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        switch (outcome[k]) {
            case Outcome::FalseInside: report.false_inside.push_back(grid[k]); break;
            case Outcome::FalseOutside: report.false_outside.push_back(grid[k]); break;
            case Outcome::Inconsistent: report.inconsistent.push_back(grid[k]); break;
            case Outcome::Match: break;
        }
    }
    return report;
}

}  // namespace hyperlip
