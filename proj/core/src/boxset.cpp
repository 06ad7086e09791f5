#include "hyperlip/boxset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hyperlip/errors.hpp"

namespace hyperlip {

namespace {

void require_dim(const BoxLipschitzSet& q, const Point& x) {
    if (x.size() != q.dim()) throw DimensionMismatch(q.dim(), x.size());
}

bool is_infinite_with(const LipExpr& f, Sign s) {
    const auto* inf = std::get_if<lip::Infinite>(&f.node().data);
    return inf && inf->sign == s;
}

void clamp_step(const BoxLipschitzSet& q, std::size_t i, Point& p) {
    const auto [lo, hi] = q.interval_at(i, p);
    p[i] = clamp(lo, hi, p[i]);
}

}  // namespace

BoxLipschitzSet::BoxLipschitzSet(std::vector<LipExpr> lower, std::vector<LipExpr> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.empty()) throw InputError("a box-Lipschitz set needs n >= 1");
    if (lower_.size() != upper_.size()) throw DimensionMismatch(lower_.size(), upper_.size());
    const std::size_t n = lower_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (lower_[i].is_infinite() && !is_infinite_with(lower_[i], Sign::Minus)) {
            throw InputError("+inf used as a lower bound");
        }
        if (upper_[i].is_infinite() && !is_infinite_with(upper_[i], Sign::Plus)) {
            throw InputError("-inf used as an upper bound");
        }
        for (const LipExpr* f : {&lower_[i], &upper_[i]}) {
            if (f->is_infinite()) continue;
            const auto d = f->domain_dim();
            if (d && *d != n - 1) throw DimensionMismatch(n - 1, *d);
            lambda_ = std::max(lambda_, lip_bound(*f));
        }
    }
}

BoxLipschitzSet BoxLipschitzSet::whole_space(std::size_t n) {
    return BoxLipschitzSet(std::vector<LipExpr>(n, LipExpr::infinite(Sign::Minus)),
                           std::vector<LipExpr>(n, LipExpr::infinite(Sign::Plus)));
}

bool BoxLipschitzSet::all_finite() const noexcept {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (lower_[i].is_infinite() || upper_[i].is_infinite()) return false;
    }
    return true;
}

std::pair<ExtendedReal, ExtendedReal> BoxLipschitzSet::interval_at(std::size_t i, const Point& x) const {
    require_dim(*this, x);
    const Point y = hat(x, i);
    const ExtendedReal lo = eval(lower_[i], y);
    const ExtendedReal hi = eval(upper_[i], y);
    if (hi < lo) throw InconsistentBounds(i, x.vec(), lo.value(), hi.value());
    return {lo, hi};
}

double violation(const BoxLipschitzSet& q, const Point& x) {
    require_dim(q, x);
    double v = 0.0;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const auto [lo, hi] = q.interval_at(i, x);
        if (lo.is_finite()) v = std::max(v, lo.value() - x[i]);
        if (hi.is_finite()) v = std::max(v, x[i] - hi.value());
    }
    return v;
}

Point coord_retract(const BoxLipschitzSet& q, std::size_t i, const Point& x) {
    if (i >= q.dim()) throw InputError("coord_retract: coordinate out of range");
    Point p = x;
    clamp_step(q, i, p);
    return p;
}

std::size_t IterationTrace::sweeps() const noexcept {
    const std::size_t n = std::max<std::size_t>(dim(), 1);
    return (steps() + n - 1) / n;
}

double IterationTrace::initial_block_max() const noexcept {
    double d = 0.0;
    for (std::size_t k = 0; k < std::min(dim(), steps()); ++k) d = std::max(d, std::abs(displacements[k]));
    return d;
}

double IterationTrace::tail_max(std::size_t count) const noexcept {
    double d = 0.0;
    const std::size_t m = steps();
    for (std::size_t k = m - std::min(count, m); k < m; ++k) d = std::max(d, std::abs(displacements[k]));
    return d;
}

std::vector<Point> IterationTrace::iterates() const {
    std::vector<Point> out;
    out.reserve(steps() + 1);
    out.push_back(start);
    Point p = start;
    for (std::size_t m = 1; m <= steps(); ++m) {
        const std::size_t i = coordinate_of_step(m, dim());
        if (values.size() == steps()) {
            p[i] = values[m - 1];
        } else {
            p[i] += displacements[m - 1];
        }
        out.push_back(p);
    }
    return out;
}

std::string trace_csv(const IterationTrace& trace) {
    std::ostringstream os;
    os.precision(17);
    os << "m,i,d\n";
    for (std::size_t m = 1; m <= trace.steps(); ++m) {
        os << m << ',' << IterationTrace::coordinate_of_step(m, trace.dim()) << ',' << trace.displacements[m - 1]
           << '\n';
    }
    return os.str();
}

IterationTrace iterate_cyclic(const BoxLipschitzSet& q, const Point& x, std::size_t steps) {
    require_dim(q, x);
    IterationTrace trace{x, {}, {}, x};
    trace.displacements.reserve(steps);
    trace.values.reserve(steps);
    Point p = x;
    const std::size_t n = q.dim();
    for (std::size_t m = 1; m <= steps; ++m) {
        const std::size_t i = IterationTrace::coordinate_of_step(m, n);
        const double before = p[i];
        clamp_step(q, i, p);
        trace.record(before, p[i]);
    }
    trace.final_point = p;
    return trace;
}

CyclicResult cyclic_retract(const BoxLipschitzSet& q, const Point& x, double tol, std::size_t max_sweeps,
                            bool polish) {
    require_dim(q, x);
    const double lambda = q.lambda();
    if (!(lambda < 1.0)) throw InputError("cyclic_retract requires lambda(Q) < 1");
    if (!(tol > 0.0)) throw InputError("cyclic_retract: tol must be positive");

    const std::size_t n = q.dim();
    const double threshold = tol * (1.0 - lambda);
    const std::size_t max_steps = max_sweeps * n;

    CyclicResult out{x, IterationTrace{x, {}, {}, x}, 0};
    Point p = x;
    double compared_window = 0.0;
    std::size_t next_compare = 0;

    for (std::size_t m = 1;; ++m) {
        if (m > max_steps) {
            if (out.certified_step == 0) throw MaxSweepsExceeded(max_sweeps, out.trace.tail_max(n));
            break;
        }
        const std::size_t i = IterationTrace::coordinate_of_step(m, n);
        const double before = p[i];
        clamp_step(q, i, p);
        out.trace.record(before, p[i]);
        if (m < n) continue;

        const double window = out.trace.tail_max(n);
        if (out.certified_step == 0) {
            if (window > threshold) continue;
            out.certified_step = m;
            if (!polish || window == 0.0) break;
            compared_window = window;
            next_compare = m + n;
            continue;
        }
        // Past the certificate each sweep shrinks the window by lambda in exact
        // arithmetic; stop once rounding prevents further progress.
        if (window == 0.0) break;
        if (m == next_compare) {
            if (window >= compared_window) break;
            compared_window = window;
            next_compare += n;
        }
    }
    out.point = p;
    out.trace.final_point = p;
    return out;
}

BoxLipschitzSet shrink_set(const BoxLipschitzSet& q, std::size_t k, double lower_anchor, double upper_anchor) {
    if (k == 0) throw InputError("shrink_set: k must be >= 1");
    const double factor = 1.0 - 1.0 / static_cast<double>(k);
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const LipExpr& lo = q.lower(i);
        const LipExpr& hi = q.upper(i);
        lower.push_back(lo.is_infinite() || lip_bound(lo) <= factor ? lo : shrink(lo, factor, lower_anchor));
        upper.push_back(hi.is_infinite() || lip_bound(hi) <= factor ? hi : shrink(hi, factor, upper_anchor));
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

Interval anchors_over(const BoxLipschitzSet& q, const Box& box) {
    if (box.dim() != q.dim()) throw DimensionMismatch(q.dim(), box.dim());
    if (!q.all_finite()) throw Unsupported("the bounded strategy needs every bound finite");
    double l = std::numeric_limits<double>::infinity();
    double u = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const Box face = box.hat(i);
        l = std::min(l, bounds_of(q.lower(i), face).lo);
        u = std::max(u, bounds_of(q.upper(i), face).hi);
    }
    if (u < l) throw InputError("anchors_over: upper anchor below lower anchor (inconsistent bounds)");
    return {l, u};
}

BoundedRetraction retract_lambda_one_bounded(const BoxLipschitzSet& q, const Point& x, double tol, const Box& box,
                                             std::size_t max_sweeps) {
    require_dim(q, x);
    if (q.lambda() > 1.0) throw InputError("retract_lambda_one_bounded requires lambda(Q) <= 1");
    if (!(tol > 0.0)) throw InputError("retract_lambda_one_bounded: tol must be positive");
    const Interval anchors = anchors_over(q, box);
    const double spread = anchors.hi - anchors.lo;

    const double k_real = std::ceil(spread / tol) + 1.0;
    if (k_real > 1e9) throw Unsupported("retract_lambda_one_bounded: (u - l) / tol too large");
    const auto k = static_cast<std::size_t>(k_real);
    const double bound = spread / static_cast<double>(k);

    BoundedRetraction out;
    out.lower_anchor = anchors.lo;
    out.upper_anchor = anchors.hi;
    out.k = k;
    out.violation_bound = bound;

    const BoxLipschitzSet shrunk = shrink_set(q, k, anchors.lo, anchors.hi);
    // Whatever the inner solve leaves on top of (u-l)/k must stay below the
    // remaining slack so that the total violation is <= tol.
    const double slack = tol - bound;
    const double inner_tol = slack > 0.0 ? slack : tol * 1e-9;
    if (max_sweeps == 0) max_sweeps = 200 * k + 10'000;
    CyclicResult inner = cyclic_retract(shrunk, x, inner_tol, max_sweeps, true);
    out.point = std::move(inner.point);
    out.trace = std::move(inner.trace);
    return out;
}

BoxLipschitzSet truncate_to_ball(const BoxLipschitzSet& q, const Point& w, double radius) {
    require_dim(q, w);
    if (!(radius >= 0.0)) throw InputError("truncation radius must be >= 0");
    std::vector<LipExpr> lower, upper;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const double lo = w[i] - radius, hi = w[i] + radius;
        lower.push_back(q.lower(i).is_infinite() ? LipExpr::constant(lo) : clamp_values(q.lower(i), lo, hi));
        upper.push_back(q.upper(i).is_infinite() ? LipExpr::constant(hi) : clamp_values(q.upper(i), lo, hi));
    }
    return BoxLipschitzSet(std::move(lower), std::move(upper));
}

GeneralRetraction retract_lambda_one_general(const BoxLipschitzSet& q, const Point& witness, const Point& x,
                                             double tol, std::optional<double> radius) {
    require_dim(q, witness);
    require_dim(q, x);
    if (q.lambda() > 1.0) throw InputError("retract_lambda_one_general requires lambda(Q) <= 1");
    if (violation(q, witness) != 0.0) throw InputError("witness is not a member of Q");
    const double r = radius.value_or(2.0 * sup_dist(x, witness) + 1.0);

    BoxLipschitzSet truncated = truncate_to_ball(q, witness, r);
    std::vector<double> lo(witness.begin(), witness.end()), hi = lo;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        lo[i] -= r;
        hi[i] += r;
    }
    const Box ball{Point(lo), Point(hi)};
    BoundedRetraction bounded = retract_lambda_one_bounded(truncated, x, tol, ball);
    return {std::move(bounded), r, std::move(truncated)};
}

std::optional<Box> find_invariant_box(const BoxLipschitzSet& q, const Point& x) {
    require_dim(q, x);
    if (!q.all_finite()) return std::nullopt;
    double r = std::max(1.0, sup_norm(x));
    for (int attempt = 0; attempt < 16; ++attempt) {
        const Box box = Box::cube(q.dim(), -r, r);
        double needed = 0.0;
        for (std::size_t i = 0; i < q.dim(); ++i) {
            const Box face = box.hat(i);
            for (const LipExpr* f : {&q.lower(i), &q.upper(i)}) {
                const Interval iv = bounds_of(*f, face);
                needed = std::max({needed, std::abs(iv.lo), std::abs(iv.hi)});
            }
        }
        // Slope-1 bounds can map [-r, r] exactly onto itself; allow for the
        // outward slack of the interval enclosure.
        if (needed <= r + 1e-9 * (1.0 + r)) return box;
        r = std::max(2.0 * r, needed);
    }
    return std::nullopt;
}

const char* to_string(Method m) noexcept {
    switch (m) {
        case Method::Identity: return "identity";
        case Method::Cyclic: return "cyclic";
        case Method::LambdaOneBounded: return "lambda_one_bounded";
        case Method::LambdaOneGeneral: return "lambda_one_general";
    }
    return "unknown";
}

Retraction retract(const BoxLipschitzSet& q, const Point& x, const RetractOptions& options) {
    require_dim(q, x);
    const double lambda = q.lambda();
    if (lambda > 1.0) throw InputError("bounds are not 1-Lipschitz (lambda > 1)");

    Retraction out;
    if (lambda < 1.0) {
        CyclicResult r = cyclic_retract(q, x, options.tol, options.max_sweeps);
        out.point = std::move(r.point);
        out.trace = std::move(r.trace);
        out.method = Method::Cyclic;
        return out;
    }
    if (options.witness) {
        GeneralRetraction r = retract_lambda_one_general(q, *options.witness, x, options.tol, options.radius);
        out.point = std::move(r.bounded.point);
        out.trace = std::move(r.bounded.trace);
        out.violation_bound = r.bounded.violation_bound;
        out.k = r.bounded.k;
        out.method = Method::LambdaOneGeneral;
        return out;
    }
    std::optional<Box> box = options.box;
    if (!box) box = find_invariant_box(q, x);
    if (!box) throw Unsupported("lambda(Q) = 1 with unbounded bounds: a witness point in Q is required");
    BoundedRetraction r = retract_lambda_one_bounded(q, x, options.tol, *box);
    out.point = std::move(r.point);
    out.trace = std::move(r.trace);
    out.violation_bound = r.violation_bound;
    out.k = r.k;
    out.method = Method::LambdaOneBounded;
    return out;
}

Point find_point(const BoxLipschitzSet& q, double tol) {
    const Point origin(q.dim());
    if (q.lambda() < 1.0) return cyclic_retract(q, origin, tol).point;
    if (q.lambda() > 1.0) throw InputError("find_point: bounds are not 1-Lipschitz");
    const auto box = find_invariant_box(q, origin);
    if (!box) throw Unsupported("find_point: lambda(Q) = 1 and the bounds are unbounded; Q may be empty");
    return retract_lambda_one_bounded(q, origin, tol, *box).point;
}

const char* to_string(Verdict v) noexcept { return v == Verdict::Stalled ? "stalled" : "decaying"; }

Verdict detect_noncontraction(const IterationTrace& trace, std::size_t window) {
    if (window == 0) throw InputError("detect_noncontraction: window must be >= 1");
    if (trace.steps() < 2 * window) throw InputError("detect_noncontraction: trace shorter than two windows");
    const auto& d = trace.displacements;
    const std::size_t m = d.size();
    double last = 0.0, previous = 0.0;
    for (std::size_t k = m - window; k < m; ++k) last = std::max(last, std::abs(d[k]));
    for (std::size_t k = m - 2 * window; k < m - window; ++k) previous = std::max(previous, std::abs(d[k]));
    if (previous == 0.0) return Verdict::Decaying;
    return last >= (1.0 - 1e-9) * previous ? Verdict::Stalled : Verdict::Decaying;
}

}  // namespace hyperlip
