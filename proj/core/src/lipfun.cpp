#include "hyperlip/lipfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperlip/errors.hpp"

namespace hyperlip {

namespace {

constexpr double kIntervalSlack = 1e-12;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw InputError(std::string(what) + " must be finite");
}

std::optional<std::size_t> common_dim(const std::vector<LipExpr>& children) {
    std::optional<std::size_t> dim;
    for (const auto& c : children) {
        if (c.is_infinite()) throw InputError("Min/Max children must be finite expressions");
        const auto d = c.domain_dim();
        if (!d) continue;
        if (dim && *dim != *d) throw DimensionMismatch(*dim, *d);
        dim = d;
    }
    return dim;
}

void check_dim(const LipExpr& f, const Point& y) {
    const auto d = f.domain_dim();
    if (d && *d != y.size()) throw DimensionMismatch(*d, y.size());
}

double eval_node(const LipNode& node, const Point& y);

double eval_child(const LipExpr& f, const Point& y) { return eval_node(f.node(), y); }

double eval_node(const LipNode& node, const Point& y) {
    return std::visit(
        overloaded{
            [](const lip::Const& c) { return c.value; },
            [&](const lip::DistCone& c) {
                return sign_value(c.orientation) * c.scale * sup_dist(c.center, y) + c.offset;
            },
            [&](const lip::Min& m) {
                double r = std::numeric_limits<double>::infinity();
                for (const auto& ch : m.children) r = std::min(r, eval_child(ch, y));
                return r;
            },
            [&](const lip::Max& m) {
                double r = -std::numeric_limits<double>::infinity();
                for (const auto& ch : m.children) r = std::max(r, eval_child(ch, y));
                return r;
            },
            [&](const lip::Blend& b) {
                if (b.factor == 0.0) return b.anchor;
                // v + (1-f)(anchor - v) moves v toward the anchor and never past
                // it in floating point, so shrunk bounds contain the original set.
                const double v = eval_child(b.inner, y);
                return v + (1.0 - b.factor) * (b.anchor - v);
            },
            [&](const lip::McShane& m) {
                double r = m.mode == McShaneMode::Inf ? std::numeric_limits<double>::infinity()
                                                      : -std::numeric_limits<double>::infinity();
                for (const auto& s : m.samples) {
                    const double d = m.scale * sup_dist(s.point, y);
                    r = m.mode == McShaneMode::Inf ? std::min(r, s.value + d) : std::max(r, s.value - d);
                }
                return r;
            },
            [](const lip::Infinite&) -> double { throw InputError("infinite bound used as a finite expression"); },
        },
        node.data);
}

// Sup-norm distance from a center to the points of a box.
Interval distance_range(const Point& center, const Box& box) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t j = 0; j < center.size(); ++j) {
        lo = std::max({lo, box.lo[j] - center[j], center[j] - box.hi[j]});
        hi = std::max({hi, std::abs(center[j] - box.lo[j]), std::abs(center[j] - box.hi[j])});
    }
    return {lo, hi};
}

Interval widen(Interval iv) { return {iv.lo - kIntervalSlack, iv.hi + kIntervalSlack}; }

Interval bounds_node(const LipNode& node, const Box& box) {
    return std::visit(
        overloaded{
            [](const lip::Const& c) { return Interval{c.value, c.value}; },
            [&](const lip::DistCone& c) {
                const Interval d = distance_range(c.center, box);
                const double a = c.scale * d.lo, b = c.scale * d.hi;
                if (c.orientation == Sign::Plus) return widen({a + c.offset, b + c.offset});
                return widen({c.offset - b, c.offset - a});
            },
            [&](const lip::Min& m) {
                Interval r{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
                for (const auto& ch : m.children) {
                    const Interval c = bounds_node(ch.node(), box);
                    r = {std::min(r.lo, c.lo), std::min(r.hi, c.hi)};
                }
                return r;
            },
            [&](const lip::Max& m) {
                Interval r{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
                for (const auto& ch : m.children) {
                    const Interval c = bounds_node(ch.node(), box);
                    r = {std::max(r.lo, c.lo), std::max(r.hi, c.hi)};
                }
                return r;
            },
            [&](const lip::Blend& b) {
                const Interval c = bounds_node(b.inner.node(), box);
                return widen({b.factor * (c.lo - b.anchor) + b.anchor, b.factor * (c.hi - b.anchor) + b.anchor});
            },
            [&](const lip::McShane& m) {
                double inf = std::numeric_limits<double>::infinity();
                Interval r = m.mode == McShaneMode::Inf ? Interval{inf, inf} : Interval{-inf, -inf};
                for (const auto& s : m.samples) {
                    const Interval d = distance_range(s.point, box);
                    if (m.mode == McShaneMode::Inf) {
                        r = {std::min(r.lo, s.value + m.scale * d.lo), std::min(r.hi, s.value + m.scale * d.hi)};
                    } else {
                        r = {std::max(r.lo, s.value - m.scale * d.hi), std::max(r.hi, s.value - m.scale * d.lo)};
                    }
                }
                return widen(r);
            },
            [](const lip::Infinite&) -> Interval { throw InputError("bounds_of: infinite expression"); },
        },
        node.data);
}

}  // namespace

LipExpr LipExpr::constant(double c) {
    require_finite(c, "constant");
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::Const{c}, std::nullopt}));
}

LipExpr LipExpr::dist_cone(Point center, double offset, double scale, Sign orientation) {
    require_finite(offset, "offset");
    if (!(scale >= 0.0 && scale <= 1.0)) throw InputError("dist_cone scale must lie in [0,1]");
    const std::size_t dim = center.size();
    return LipExpr(std::make_shared<const LipNode>(
        LipNode{lip::DistCone{std::move(center), offset, scale, orientation}, dim}));
}

LipExpr LipExpr::min(std::vector<LipExpr> children) {
    if (children.empty()) throw InputError("Min needs at least one child");
    const auto dim = common_dim(children);
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::Min{std::move(children)}, dim}));
}

LipExpr LipExpr::max(std::vector<LipExpr> children) {
    if (children.empty()) throw InputError("Max needs at least one child");
    const auto dim = common_dim(children);
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::Max{std::move(children)}, dim}));
}

LipExpr LipExpr::blend(LipExpr inner, double factor, double anchor) {
    if (inner.is_infinite()) throw InputError("cannot blend an infinite bound");
    if (!(factor >= 0.0 && factor <= 1.0)) throw InputError("blend factor must lie in [0,1]");
    require_finite(anchor, "blend anchor");
    const auto dim = inner.domain_dim();
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::Blend{std::move(inner), factor, anchor}, dim}));
}

LipExpr LipExpr::mcshane(std::vector<LipSample> samples, double scale, McShaneMode mode) {
    if (samples.empty()) throw InputError("McShane expression needs at least one sample");
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw InputError("McShane scale must be finite and >= 0");
    const std::size_t dim = samples.front().point.size();
    for (const auto& s : samples) {
        if (s.point.size() != dim) throw DimensionMismatch(dim, s.point.size());
        require_finite(s.value, "McShane sample value");
    }
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::McShane{std::move(samples), scale, mode}, dim}));
}

LipExpr LipExpr::infinite(Sign sign) {
    return LipExpr(std::make_shared<const LipNode>(LipNode{lip::Infinite{sign}, std::nullopt}));
}

bool LipExpr::is_infinite() const noexcept { return std::holds_alternative<lip::Infinite>(node_->data); }

std::optional<std::size_t> LipExpr::domain_dim() const noexcept { return node_->dim; }

ExtendedReal eval(const LipExpr& f, const Point& y) {
    if (const auto* inf = std::get_if<lip::Infinite>(&f.node().data)) {
        return inf->sign == Sign::Plus ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
    }
    return eval_finite(f, y);
}

double eval_finite(const LipExpr& f, const Point& y) {
    check_dim(f, y);
    return eval_node(f.node(), y);
}

double lip_bound(const LipExpr& f) {
    return std::visit(overloaded{
                          [](const lip::Const&) { return 0.0; },
                          [](const lip::DistCone& c) { return c.scale; },
                          [](const lip::Min& m) {
                              double r = 0.0;
                              for (const auto& ch : m.children) r = std::max(r, lip_bound(ch));
                              return r;
                          },
                          [](const lip::Max& m) {
                              double r = 0.0;
                              for (const auto& ch : m.children) r = std::max(r, lip_bound(ch));
                              return r;
                          },
                          [](const lip::Blend& b) { return b.factor * lip_bound(b.inner); },
                          [](const lip::McShane& m) { return m.scale; },
                          [](const lip::Infinite&) -> double {
                              throw InputError("lip_bound of an infinite bound");
                          },
                      },
                      f.node().data);
}

LipschitzCheck verify_lipschitz_on_grid(const LipExpr& f, const std::vector<Point>& grid, double lambda, double tol) {
    if (grid.empty()) throw InputError("verify_lipschitz_on_grid: empty grid");
    if (f.is_infinite()) throw InputError("verify_lipschitz_on_grid: infinite expression");
    std::vector<double> values;
    values.reserve(grid.size());
    for (const auto& y : grid) values.push_back(eval_finite(f, y));

    LipschitzCheck out;
    for (std::size_t a = 0; a < grid.size(); ++a) {
        for (std::size_t b = a + 1; b < grid.size(); ++b) {
            const double gap = std::abs(values[a] - values[b]);
            const double allowed = lambda * sup_dist(grid[a], grid[b]);
            if (gap > allowed + tol) return {false, a, b, gap, allowed};
        }
    }
    return out;
}

LipExpr shrink(const LipExpr& f, double factor, double anchor) { return LipExpr::blend(f, factor, anchor); }

LipExpr clamp_values(const LipExpr& f, double lo, double hi) {
    if (lo > hi) throw InputError("clamp_values: lo > hi");
    return LipExpr::max({LipExpr::constant(lo), LipExpr::min({LipExpr::constant(hi), f})});
}

Interval bounds_of(const LipExpr& f, const Box& box) {
    const auto d = f.domain_dim();
    if (d && *d != box.dim()) throw DimensionMismatch(*d, box.dim());
    for (std::size_t j = 0; j < box.dim(); ++j) {
        if (box.lo[j] > box.hi[j]) throw InputError("bounds_of: degenerate box");
    }
    return bounds_node(f.node(), box);
}

}  // namespace hyperlip
