#include "hyperlip/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperlip/errors.hpp"

namespace hyperlip {

namespace {

void require_finite(const std::vector<double>& v) {
    for (double c : v) {
        if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
    }
}

void require_same_dim(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw DimensionMismatch(x.size(), y.size());
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t e, std::size_t g)
    : InputError("dimension mismatch: expected " + std::to_string(e) + ", got " + std::to_string(g)),
      expected(e),
      got(g) {}

InconsistentBounds::InconsistentBounds(std::size_t c, std::vector<double> pt, double lo, double up)
    : InputError("inconsistent bounds on coordinate " + std::to_string(c) + ": lower " + std::to_string(lo) +
                 " > upper " + std::to_string(up)),
      coordinate(c),
      at(std::move(pt)),
      lower(lo),
      upper(up) {}

NotLipschitz::NotLipschitz(std::size_t a, std::size_t b, double gap, double allowed_gap)
    : InputError("Lipschitz condition fails for pair (" + std::to_string(a) + ", " + std::to_string(b) + ")"),
      first(a),
      second(b),
      value_gap(gap),
      allowed(allowed_gap) {}

MaxSweepsExceeded::MaxSweepsExceeded(std::size_t s, double w)
    : ContractError("cyclic iteration did not reach its stopping threshold within " + std::to_string(s) +
                    " sweeps"),
      sweeps(s),
      last_window(w) {}

Point::Point(std::size_t n, double fill) : coords_(n, fill) { require_finite(coords_); }

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) { require_finite(coords_); }

Point::Point(std::initializer_list<double> coords) : coords_(coords) { require_finite(coords_); }

double ExtendedReal::value() const {
    if (kind_ != Kind::Finite) throw InputError("infinite value where a real number is required");
    return value_;
}

bool operator<(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    using K = ExtendedReal::Kind;
    if (a.kind_ == K::Finite && b.kind_ == K::Finite) return a.value_ < b.value_;
    if (a.kind_ == b.kind_) return false;
    return a.kind_ == K::NegInf || b.kind_ == K::PosInf;
}

bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != ExtendedReal::Kind::Finite || a.value_ == b.value_;
}

double sup_dist(const Point& x, const Point& y) {
    require_same_dim(x, y);
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
    return d;
}

double sup_norm(const Point& x) {
    double d = 0.0;
    for (double c : x) d = std::max(d, std::abs(c));
    return d;
}

Point hat(const Point& x, std::size_t i) {
    if (i >= x.size()) throw InputError("hat: coordinate index out of range");
    std::vector<double> out;
    out.reserve(x.size() - 1);
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (j != i) out.push_back(x[j]);
    }
    return Point(std::move(out));
}

Point insert_coordinate(const Point& y, std::size_t i, double value) {
    if (i > y.size()) throw InputError("insert_coordinate: index out of range");
    std::vector<double> out(y.begin(), y.end());
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), value);
    return Point(std::move(out));
}

double clamp(ExtendedReal a, ExtendedReal b, double x) {
    if (b < a) throw InputError("clamp: empty interval (a > b)");
    if (!std::isfinite(x)) throw InputError("clamp: argument must be finite");
    double r = x;
    if (a.is_finite()) r = std::max(a.value(), r);
    if (b.is_finite()) r = std::min(r, b.value());
    return r;
}

bool cone_contains(const ConeDescriptor& cone, const Point& q, bool strict) {
    require_same_dim(cone.apex, q);
    if (cone.axis >= q.size()) throw InputError("cone axis out of range");
    const double t = sign_value(cone.sign) * (q[cone.axis] - cone.apex[cone.axis]);
    double off_axis = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (j != cone.axis) off_axis = std::max(off_axis, std::abs(q[j] - cone.apex[j]));
    }
    if (strict) return t > 0.0 && off_axis < t;
    return t >= 0.0 && off_axis <= t;
}

bool cone_contains_general(const Point& p, const Point& x, const Point& q, double tol) {
    return std::abs(sup_dist(p, q) - sup_dist(p, x) - sup_dist(x, q)) <= tol;
}

double directed_hausdorff(std::span<const Point> from, std::span<const Point> to) {
    if (from.empty() || to.empty()) throw InputError("Hausdorff distance of an empty set");
    double worst = 0.0;
    for (const auto& a : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& b : to) {
            best = std::min(best, sup_dist(a, b));
            if (best <= worst) break;
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double hausdorff_distance(std::span<const Point> a, std::span<const Point> b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

Box Box::cube(std::size_t n, double lo, double hi) { return Box{Point(n, lo), Point(n, hi)}; }

bool Box::contains(const Point& x) const {
    require_same_dim(lo, x);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    }
    return true;
}

Box Box::hat(std::size_t i) const { return Box{hyperlip::hat(lo, i), hyperlip::hat(hi, i)}; }

std::vector<Point> grid_points(const Box& box, double step) {
    if (!(step > 0.0)) throw InputError("grid step must be positive");
    require_same_dim(box.lo, box.hi);
    const std::size_t n = box.dim();
    std::vector<std::size_t> counts(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (box.hi[i] < box.lo[i]) throw InputError("grid box has lo > hi");
        // 1e-9 absorbs rounding in (hi-lo)/step for exactly divisible extents.
        counts[i] = static_cast<std::size_t>(std::floor((box.hi[i] - box.lo[i]) / step + 1e-9)) + 1;
        total *= counts[i];
    }
    std::vector<Point> out;
    out.reserve(total);
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> c(n);
    for (std::size_t k = 0; k < total; ++k) {
        for (std::size_t i = 0; i < n; ++i) c[i] = box.lo[i] + static_cast<double>(idx[i]) * step;
        out.emplace_back(c);
        for (std::size_t i = n; i-- > 0;) {
            if (++idx[i] < counts[i]) break;
            idx[i] = 0;
        }
    }
    return out;
}

}  // namespace hyperlip
