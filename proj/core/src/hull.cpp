#include "hyperlip/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperlip/errors.hpp"
#include "hyperlip/parallel.hpp"

namespace hyperlip {

namespace {

void check_size(const FiniteMetricSpace& space, std::span<const double> f) {
    if (f.size() != space.size()) throw DimensionMismatch(space.size(), f.size());
}

bool in_delta_unchecked(const FiniteMetricSpace& space, std::span<const double> f, double tol) {
    const std::size_t m = space.size();
    for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = x; y < m; ++y) {
            if (f[x] + f[y] < space(x, y) - tol) return false;
        }
    }
    return true;
}

bool extremal_unchecked(const FiniteMetricSpace& space, std::span<const double> f, double tol) {
    const std::size_t m = space.size();
    for (std::size_t x = 0; x < m; ++x) {
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t y = 0; y < m; ++y) best = std::max(best, space(x, y) - f[y]);
        if (f[x] > best + tol) return false;
    }
    return true;
}

}  // namespace

bool in_delta(const FiniteMetricSpace& space, std::span<const double> f, double tol) {
    check_size(space, f);
    return in_delta_unchecked(space, f, tol);
}

bool is_extremal(const FiniteMetricSpace& space, std::span<const double> f, double tol) {
    check_size(space, f);
    if (!in_delta_unchecked(space, f, tol)) throw InputError("is_extremal: f is not in Delta(X)");
    return extremal_unchecked(space, f, tol);
}

std::optional<std::size_t> classify_extremal_zero(const FiniteMetricSpace& space, std::span<const double> f,
                                                  double tol) {
    if (!is_extremal(space, f, tol)) throw InputError("classify_extremal_zero: f is not extremal");
    const auto it = std::min_element(f.begin(), f.end());
    if (it == f.end() || *it > tol) return std::nullopt;
    const auto x = static_cast<std::size_t>(it - f.begin());
    for (std::size_t y = 0; y < space.size(); ++y) {
        if (std::abs(f[y] - space(x, y)) > tol) {
            throw ContractError("extremal function with a zero that is not a distance function");
        }
    }
    return x;
}

FiniteMetricSpace attach_point(const FiniteMetricSpace& space, std::span<const double> f) {
    check_size(space, f);
    const std::size_t m = space.size();
    for (std::size_t x = 0; x < m; ++x) {
        if (!(f[x] > 0.0)) throw InputError("attach_point: f must be positive (f(" + std::to_string(x) + ") <= 0)");
        for (std::size_t y = x + 1; y < m; ++y) {
            if (f[x] + f[y] < space(x, y) - kDefaultTol) {
                throw InputError("attach_point: f is not in Delta(X) at (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ")");
            }
            if (std::abs(f[x] - f[y]) > space(x, y) + kDefaultTol) {
                throw NotLipschitz(x, y, std::abs(f[x] - f[y]), space(x, y));
            }
        }
    }
    DistanceMatrix d = space.matrix();
    for (std::size_t x = 0; x < m; ++x) d[x].push_back(f[x]);
    d.emplace_back(f.begin(), f.end());
    d.back().push_back(0.0);
    return FiniteMetricSpace(d);
}

std::vector<std::vector<double>> enumerate_extremal_grid(const FiniteMetricSpace& space, double resolution) {
    const std::size_t m = space.size();
    if (m == 0) throw InputError("enumerate_extremal_grid: empty space");
    if (m > 5) throw InputError("enumerate_extremal_grid: at most 5 points");
    if (!(resolution > 0.0)) throw InputError("enumerate_extremal_grid: resolution must be positive");

    const double diam = space.diameter();
    const auto per_axis = static_cast<std::size_t>(std::floor(diam / resolution + 1e-9)) + 1;
    double total_real = 1.0;
    for (std::size_t k = 0; k < m; ++k) total_real *= static_cast<double>(per_axis);
    if (total_real > 1e8) throw InputError("enumerate_extremal_grid: more than 1e8 grid candidates");
    const auto total = static_cast<std::size_t>(total_real);
    const double tol = resolution / 2.0;

    auto decode = [&](std::size_t index, std::vector<double>& f) {
        for (std::size_t k = m; k-- > 0;) {
            f[k] = static_cast<double>(index % per_axis) * resolution;
            index /= per_axis;
        }
    };

    const std::size_t chunks = std::min<std::size_t>(total, 64);
    const std::size_t chunk_len = (total + chunks - 1) / chunks;
    std::vector<std::vector<std::vector<double>>> found(chunks);
    parallel_for_chunks(chunks, [&](std::size_t c0, std::size_t c1) {
        std::vector<double> f(m);
        for (std::size_t c = c0; c < c1; ++c) {
            const std::size_t end = std::min(total, (c + 1) * chunk_len);
            for (std::size_t idx = c * chunk_len; idx < end; ++idx) {
                decode(idx, f);
                if (in_delta_unchecked(space, f, tol) && extremal_unchecked(space, f, tol)) found[c].push_back(f);
            }
        }
    });

    std::vector<std::vector<double>> out;
    for (auto& part : found) {
        for (auto& f : part) out.push_back(std::move(f));
    }
    const double top = static_cast<double>(per_axis - 1);
    for (std::size_t x = 0; x < m; ++x) {
        std::vector<double> snapped(m);
        for (std::size_t y = 0; y < m; ++y) {
            snapped[y] = std::clamp(std::round(space(x, y) / resolution), 0.0, top) * resolution;
        }
        out.push_back(std::move(snapped));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hyperlip
