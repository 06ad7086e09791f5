#pragma once

// Sup-norm geometry on R^n: points, the interval projection p([a,b], x),
// coordinate deletion, axis cones and finite Hausdorff distance.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperlip {

inline constexpr double kDefaultTol = 1e-12;

/// A point of l_inf^n. n = 0 is allowed and stands for the one-point space l_inf^0.
class Point {
public:
    Point() = default;
    explicit Point(std::size_t n, double fill = 0.0);
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    std::size_t size() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }

    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }
    std::span<const double> coords() const noexcept { return coords_; }
    const std::vector<double>& vec() const noexcept { return coords_; }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<double> coords_;
};

/// A real number or one of the two infinities. Only used where an
/// inequality may be dropped.
class ExtendedReal {
public:
    enum class Kind { NegInf, Finite, PosInf };

    constexpr ExtendedReal(double v = 0.0) noexcept : kind_(Kind::Finite), value_(v) {}
    static constexpr ExtendedReal neg_inf() noexcept { return ExtendedReal(Kind::NegInf); }
    static constexpr ExtendedReal pos_inf() noexcept { return ExtendedReal(Kind::PosInf); }

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    /// Throws InputError when infinite.
    double value() const;

    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) noexcept;
    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) noexcept;

private:
    constexpr explicit ExtendedReal(Kind k) noexcept : kind_(k), value_(0.0) {}
    Kind kind_;
    double value_;
};

/// max_i |x_i - y_i|; 0 for two empty points.
double sup_dist(const Point& x, const Point& y);
double sup_norm(const Point& x);

/// x with coordinate i removed. hat of a 1-point vector is the empty point.
Point hat(const Point& x, std::size_t i);
/// Inverse of hat: inserts `value` so that it becomes coordinate i.
Point insert_coordinate(const Point& y, std::size_t i, double value);

/// p([a,b], x) = min{max{a, x}, b}. Requires a <= b.
double clamp(ExtendedReal a, ExtendedReal b, double x);

enum class Sign { Plus, Minus };

inline constexpr double sign_value(Sign s) noexcept { return s == Sign::Plus ? 1.0 : -1.0; }

/// C(apex, +i) = {apex + t e_i + y : t >= 0, y orthogonal to e_i, |y| <= t}
/// and its mirror C(apex, -i).
struct ConeDescriptor {
    Point apex;
    std::size_t axis = 0;
    Sign sign = Sign::Plus;

    friend bool operator==(const ConeDescriptor&, const ConeDescriptor&) = default;
};

/// Closed membership by default; `strict` tests the interior.
bool cone_contains(const ConeDescriptor& cone, const Point& q, bool strict = false);

/// q in C(p, x) = {q : d(p,q) = d(p,x) + d(x,q)} up to `tol`.
bool cone_contains_general(const Point& p, const Point& x, const Point& q, double tol = kDefaultTol);

double directed_hausdorff(std::span<const Point> from, std::span<const Point> to);
double hausdorff_distance(std::span<const Point> a, std::span<const Point> b);

/// Axis-aligned box [lo_1,hi_1] x ... x [lo_n,hi_n].
struct Box {
    Point lo;
    Point hi;

    static Box cube(std::size_t n, double lo, double hi);
    std::size_t dim() const noexcept { return lo.size(); }
    bool contains(const Point& x) const;
    /// The box with axis i removed.
    Box hat(std::size_t i) const;
};

/// Regular grid lo + k*step inside the box along every axis, in
/// lexicographic order (first coordinate slowest).
std::vector<Point> grid_points(const Box& box, double step);

}  // namespace hyperlip
