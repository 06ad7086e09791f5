#pragma once

// Q = { x in l_inf^n : lower_i(hat_i x) <= x_i <= upper_i(hat_i x) for all i }
// and the 1-Lipschitz retractions onto it.
//
// Retraction strategies, by the Lipschitz bound lambda(Q) of the bounds:
//  * lambda < 1: cyclic iteration of the single-coordinate clamps. The
//    displacement sequence decays geometrically (one factor lambda per sweep),
//    which gives the stopping certificate.
//  * lambda = 1, bounded on a box: replace Q by the shrunk set Q_k whose bounds
//    are blended toward global anchors l, u with factor 1 - 1/k, then iterate.
//  * lambda = 1 with a known member: truncate to a sup-norm ball around the
//    member (bounded case), then as above.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlip/geometry.hpp"
#include "hyperlip/lipfun.hpp"

namespace hyperlip {

class BoxLipschitzSet {
public:
    /// lower[i] must be finite or Infinite(-); upper[i] finite or Infinite(+);
    /// every finite bound has domain dimension n-1.
    BoxLipschitzSet(std::vector<LipExpr> lower, std::vector<LipExpr> upper);

    /// All of l_inf^n.
    static BoxLipschitzSet whole_space(std::size_t n);

    std::size_t dim() const noexcept { return lower_.size(); }
    const LipExpr& lower(std::size_t i) const { return lower_.at(i); }
    const LipExpr& upper(std::size_t i) const { return upper_.at(i); }
    const std::vector<LipExpr>& lower_bounds() const noexcept { return lower_; }
    const std::vector<LipExpr>& upper_bounds() const noexcept { return upper_; }

    /// max of lip_bound over the finite bounds (0 if there are none).
    double lambda() const noexcept { return lambda_; }
    bool all_finite() const noexcept;

    /// The interval [lower_i, upper_i] evaluated at hat_i(x). Throws
    /// InconsistentBounds if it is empty.
    std::pair<ExtendedReal, ExtendedReal> interval_at(std::size_t i, const Point& x) const;

private:
    std::vector<LipExpr> lower_;
    std::vector<LipExpr> upper_;
    double lambda_ = 0.0;
};

/// max_i of how far x_i lies outside its interval; 0 iff x is in Q.
double violation(const BoxLipschitzSet& q, const Point& x);

/// Clamps coordinate i into its interval. Leaves hat_i(x) untouched.
Point coord_retract(const BoxLipschitzSet& q, std::size_t i, const Point& x);

/// Displacements of the cyclic iteration Phi_m = phi_[m] o Phi_{m-1}.
/// Step m (1-based) moves coordinate (m-1) mod n by displacements[m-1].
struct IterationTrace {
    Point start;
    std::vector<double> displacements;
    /// Coordinate value written at each step, so iterates() is bit-exact.
    std::vector<double> values;
    Point final_point;

    void record(double before, double after) {
        displacements.push_back(after - before);
        values.push_back(after);
    }

    std::size_t dim() const noexcept { return start.size(); }
    std::size_t steps() const noexcept { return displacements.size(); }
    std::size_t sweeps() const noexcept;
    /// D = max{|d_1|, ..., |d_n|}.
    double initial_block_max() const noexcept;
    /// max |d| over the last `count` steps.
    double tail_max(std::size_t count) const noexcept;
    /// Phi_0(x), ..., Phi_m(x).
    std::vector<Point> iterates() const;

    static std::size_t coordinate_of_step(std::size_t m, std::size_t n) noexcept { return (m - 1) % n; }
};

/// CSV rows "m,i,d_m" with a header line.
std::string trace_csv(const IterationTrace& trace);

/// Phi_m(x) for a fixed number of steps; no hypotheses on lambda.
IterationTrace iterate_cyclic(const BoxLipschitzSet& q, const Point& x, std::size_t steps);

struct CyclicResult {
    Point point;
    IterationTrace trace;
    /// First step at which the last-n window fell below tol * (1 - lambda).
    std::size_t certified_step = 0;
};

/// Cyclic retraction for lambda(Q) < 1. Stops once the last n displacements
/// are all <= tol * (1 - lambda); the limit is then within tol. With `polish`
/// the iteration continues until the displacements stop shrinking (floating
/// point fixed point), which makes the computed map 1-Lipschitz to rounding.
CyclicResult cyclic_retract(const BoxLipschitzSet& q, const Point& x, double tol, std::size_t max_sweeps = 1'000'000,
                            bool polish = true);

/// Q_k: bounds with lip_bound > 1 - 1/k are blended toward the anchors
/// (upper toward u, lower toward l) with factor 1 - 1/k. Bounds that are
/// already (1 - 1/k)-Lipschitz are kept, which only tightens Q_k.
BoxLipschitzSet shrink_set(const BoxLipschitzSet& q, std::size_t k, double lower_anchor, double upper_anchor);

/// Global anchors l (below every lower bound) and u (above every upper bound)
/// over the box. Requires all bounds finite.
Interval anchors_over(const BoxLipschitzSet& q, const Box& box);

struct BoundedRetraction {
    Point point;
    double lower_anchor = 0.0;
    double upper_anchor = 0.0;
    std::size_t k = 1;
    /// (u - l) / k: points of Q_k violate Q by at most this much.
    double violation_bound = 0.0;
    IterationTrace trace;
};

/// Retraction for lambda(Q) <= 1 with all bounds finite, through Q_k with
/// k = ceil((u - l) / tol) + 1. Points of Q whose coordinates lie in `box`
/// are fixed exactly. max_sweeps = 0 picks a budget from k.
BoundedRetraction retract_lambda_one_bounded(const BoxLipschitzSet& q, const Point& x, double tol, const Box& box,
                                             std::size_t max_sweeps = 0);

struct GeneralRetraction {
    BoundedRetraction bounded;
    double radius = 0.0;
    BoxLipschitzSet truncated;
};

/// Bounds truncated to the ball B(witness, r): each bound g becomes
/// clamp(w_i - r, w_i + r, g), dropped bounds become w_i -/+ r.
BoxLipschitzSet truncate_to_ball(const BoxLipschitzSet& q, const Point& witness, double radius);

/// Retraction for lambda(Q) <= 1 given a member of Q. The default radius is
/// 2 |x - witness| + 1; pass a fixed radius to use one retraction for many x.
GeneralRetraction retract_lambda_one_general(const BoxLipschitzSet& q, const Point& witness, const Point& x,
                                             double tol, std::optional<double> radius = std::nullopt);

/// A cube [-R,R]^n containing x that the bounds map into itself
/// (every finite bound takes values in [-R,R] on the cube). nullopt if none
/// is found after a bounded number of doublings.
std::optional<Box> find_invariant_box(const BoxLipschitzSet& q, const Point& x);

enum class Method { Identity, Cyclic, LambdaOneBounded, LambdaOneGeneral };
const char* to_string(Method m) noexcept;

struct RetractOptions {
    double tol = 1e-6;
    std::size_t max_sweeps = 1'000'000;
    std::optional<Point> witness;
    std::optional<Box> box;
    std::optional<double> radius;
};

struct Retraction {
    Point point;
    Method method = Method::Identity;
    IterationTrace trace;
    /// (u-l)/k for the lambda = 1 strategies, 0 otherwise.
    double violation_bound = 0.0;
    std::size_t k = 0;
};

/// Picks a strategy from lambda(Q) and the options. Throws InputError when
/// lambda > 1 and Unsupported for lambda = 1 with unbounded bounds and no
/// witness.
Retraction retract(const BoxLipschitzSet& q, const Point& x, const RetractOptions& options);

/// A member of Q (up to tol) obtained by retracting the origin.
Point find_point(const BoxLipschitzSet& q, double tol = 1e-6);

enum class Verdict { Decaying, Stalled };
const char* to_string(Verdict v) noexcept;

/// Stalled iff the largest |d| in the last window is not smaller than in the
/// window before it. An all-zero trace is converged, hence Decaying.
Verdict detect_noncontraction(const IterationTrace& trace, std::size_t window);

}  // namespace hyperlip
