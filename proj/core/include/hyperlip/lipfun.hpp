#pragma once

// Closed expression trees for lambda-Lipschitz functions l_inf^{d} -> R u {+-inf}.
//
// Every finite variant carries a syntactic Lipschitz bound (lip_bound) that
// the retraction code trusts; verify_lipschitz_on_grid is the independent
// sampling check. Expressions are immutable and cheap to copy (shared nodes).

#include <cstddef>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "hyperlip/geometry.hpp"

namespace hyperlip {

struct LipNode;

enum class McShaneMode { Inf, Sup };

struct LipSample {
    Point point;
    double value = 0.0;
};

class LipExpr {
public:
    /// y -> c
    static LipExpr constant(double c);
    /// y -> orientation * scale * |center - y| + offset
    static LipExpr dist_cone(Point center, double offset, double scale = 1.0, Sign orientation = Sign::Plus);
    static LipExpr min(std::vector<LipExpr> children);
    static LipExpr max(std::vector<LipExpr> children);
    /// y -> factor * (inner(y) - anchor) + anchor
    static LipExpr blend(LipExpr inner, double factor, double anchor);
    /// Inf: y -> min_j (v_j + scale |y_j - y|);  Sup: y -> max_j (v_j - scale |y_j - y|)
    static LipExpr mcshane(std::vector<LipSample> samples, double scale, McShaneMode mode);
    /// The dropped inequality: -inf as a lower bound, +inf as an upper bound.
    static LipExpr infinite(Sign sign);

    const LipNode& node() const noexcept { return *node_; }
    bool is_infinite() const noexcept;
    /// Dimension of the domain, or nullopt if the expression is dimension-free (Const, Infinite).
    std::optional<std::size_t> domain_dim() const noexcept;

private:
    explicit LipExpr(std::shared_ptr<const LipNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const LipNode> node_;
};

namespace lip {

struct Const {
    double value;
};
struct DistCone {
    Point center;
    double offset;
    double scale;
    Sign orientation;
};
struct Min {
    std::vector<LipExpr> children;
};
struct Max {
    std::vector<LipExpr> children;
};
struct Blend {
    LipExpr inner;
    double factor;
    double anchor;
};
struct McShane {
    std::vector<LipSample> samples;
    double scale;
    McShaneMode mode;
};
struct Infinite {
    Sign sign;
};

}  // namespace lip

struct LipNode {
    std::variant<lip::Const, lip::DistCone, lip::Min, lip::Max, lip::Blend, lip::McShane, lip::Infinite> data;
    std::optional<std::size_t> dim;
};

ExtendedReal eval(const LipExpr& f, const Point& y);
/// Like eval but throws InputError on the Infinite variant.
double eval_finite(const LipExpr& f, const Point& y);

/// Sound syntactic Lipschitz bound. Throws InputError for Infinite.
double lip_bound(const LipExpr& f);

struct LipschitzCheck {
    bool ok = true;
    std::size_t first = 0;
    std::size_t second = 0;
    double value_gap = 0.0;
    double allowed = 0.0;
};

/// Checks |f(y) - f(y')| <= lambda |y - y'| + tol on all pairs of the grid.
LipschitzCheck verify_lipschitz_on_grid(const LipExpr& f, const std::vector<Point>& grid, double lambda,
                                        double tol = kDefaultTol);

/// Blend(f, factor, anchor). With anchor above f this is an upper bound that
/// decreases to f as factor -> 1; with anchor below f, the mirror.
LipExpr shrink(const LipExpr& f, double factor, double anchor);

/// min{max{lo, f}, hi}, expressed with Min/Max of constants.
LipExpr clamp_values(const LipExpr& f, double lo, double hi);

struct Interval {
    double lo;
    double hi;
};

/// Outward interval enclosure of f over the box (domain of f).
Interval bounds_of(const LipExpr& f, const Box& box);

}  // namespace hyperlip
