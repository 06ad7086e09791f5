#include "hyperlip/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "hyperlip/errors.hpp"

namespace hyperlip {

namespace {

void check_subset(const FiniteMetricSpace& space, std::span<const std::size_t> subset, std::size_t values) {
    if (subset.empty()) throw InputError("extension needs a non-empty subset A");
    if (subset.size() != values) throw DimensionMismatch(subset.size(), values);
    std::vector<std::size_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InputError("subset A has repeated indices");
    }
    if (sorted.back() >= space.size()) throw InputError("subset index out of range");
}

// Values within rounding of Lipschitz can make the formula miss v[a] by an
// ulp; on A itself return the data exactly.
std::optional<double> sample_at(std::span<const std::size_t> subset, std::span<const double> values, std::size_t b) {
    for (std::size_t a = 0; a < subset.size(); ++a)
        if (subset[a] == b) return values[a];
    return std::nullopt;
}

}  // namespace

void require_lipschitz_values(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                              std::span<const double> values, double tol) {
    check_subset(space, subset, values.size());
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t c = a + 1; c < subset.size(); ++c) {
            const double gap = std::abs(values[a] - values[c]);
            const double allowed = space(subset[a], subset[c]);
            if (gap > allowed + tol) throw NotLipschitz(subset[a], subset[c], gap, allowed);
        }
    }
}

double mcshane_extend_component(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                std::span<const double> values, std::size_t b) {
    require_lipschitz_values(space, subset, values);
    if (b >= space.size()) throw InputError("point index out of range");
    if (const auto hit = sample_at(subset, values, b)) return *hit;
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < subset.size(); ++a) r = std::min(r, values[a] + space(subset[a], b));
    return r;
}

double mcshane_extend_component_lower(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                      std::span<const double> values, std::size_t b) {
    require_lipschitz_values(space, subset, values);
    if (b >= space.size()) throw InputError("point index out of range");
    if (const auto hit = sample_at(subset, values, b)) return *hit;
    double r = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < subset.size(); ++a) r = std::max(r, values[a] - space(subset[a], b));
    return r;
}

std::vector<Point> extend_into_q(const FiniteMetricSpace& space, std::span<const std::size_t> subset,
                                 std::span<const Point> phi, const BoxLipschitzSet& q,
                                 const RetractOptions& options) {
    check_subset(space, subset, phi.size());
    const std::size_t n = q.dim();
    for (std::size_t a = 0; a < phi.size(); ++a) {
        if (phi[a].size() != n) throw DimensionMismatch(n, phi[a].size());
        if (violation(q, phi[a]) != 0.0) {
            throw InputError("phi(" + std::to_string(subset[a]) + ") is not a member of Q");
        }
        for (std::size_t c = a + 1; c < phi.size(); ++c) {
            const double gap = sup_dist(phi[a], phi[c]);
            const double allowed = space(subset[a], subset[c]);
            if (gap > allowed + kDefaultTol) throw NotLipschitz(subset[a], subset[c], gap, allowed);
        }
    }

    std::vector<Point> extended;
    extended.reserve(space.size());
    std::vector<double> coords(n);
    for (std::size_t b = 0; b < space.size(); ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            double r = std::numeric_limits<double>::infinity();
            for (std::size_t a = 0; a < subset.size(); ++a) r = std::min(r, phi[a][i] + space(subset[a], b));
            coords[i] = r;
        }
        extended.emplace_back(coords);
    }

    // One retraction for all of B: the radius and the working box must not
    // depend on the individual point, or the composite would not be 1-Lipschitz.
    RetractOptions shared = options;
    if (q.lambda() >= 1.0) {
        const auto widest = std::max_element(extended.begin(), extended.end(), [](const Point& x, const Point& y) {
            return sup_norm(x) < sup_norm(y);
        });
        if (shared.witness && !shared.radius) {
            double far = 0.0;
            for (const auto& x : extended) far = std::max(far, sup_dist(x, *shared.witness));
            shared.radius = 2.0 * far + 1.0;
        } else if (!shared.witness && !shared.box) {
            shared.box = find_invariant_box(q, *widest);
        }
    }

    std::vector<Point> image;
    image.reserve(space.size());
    for (const auto& x : extended) image.push_back(retract(q, x, shared).point);
    return image;
}

MapLipschitzSummary check_map_lipschitz(const FiniteMetricSpace& space, std::span<const Point> image, double tol) {
    if (image.size() != space.size()) throw DimensionMismatch(space.size(), image.size());
    MapLipschitzSummary s;
    s.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < image.size(); ++a) {
        for (std::size_t b = a + 1; b < image.size(); ++b) {
            const double excess = sup_dist(image[a], image[b]) - space(a, b);
            ++s.pairs;
            s.worst_excess = std::max(s.worst_excess, excess);
            if (excess > tol) ++s.failures;
        }
    }
    if (s.pairs == 0) s.worst_excess = 0.0;
    return s;
}

std::vector<Point> kuratowski_embed(const FiniteMetricSpace& space, std::size_t basepoint) {
    if (basepoint >= space.size()) throw InputError("basepoint out of range");
    std::vector<Point> out;
    out.reserve(space.size());
    std::vector<double> c(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        for (std::size_t y = 0; y < space.size(); ++y) c[y] = space(x, y) - space(basepoint, y);
        out.emplace_back(c);
    }
    return out;
}

}  // namespace hyperlip
