#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "hyperlip/errors.hpp"
#include "hyperlip/geometry.hpp"
#include "hyperlip/instances.hpp"
#include "support/oracles.hpp"

namespace hyperlip {
namespace {

TEST(SupDist, Examples) {
    EXPECT_EQ(sup_dist(Point{0, 0}, Point{0, 0}), 0.0);
    EXPECT_EQ(sup_dist(Point{1, -2}, Point{4, 0}), 3.0);
    EXPECT_EQ(sup_dist(Point{2.5}, Point{-1.0}), 3.5);
    EXPECT_EQ(sup_dist(Point{}, Point{}), 0.0);
}

TEST(SupDist, DimensionMismatchThrows) {
    EXPECT_THROW(sup_dist(Point{1, 2}, Point{1}), DimensionMismatch);
}

TEST(PointTest, RejectsNonFinite) {
    EXPECT_THROW(Point({1.0, std::numeric_limits<double>::infinity()}), InputError);
    EXPECT_THROW(Point(std::vector<double>{std::nan("")}), InputError);
}

TEST(Hat, Examples) {
    EXPECT_EQ(hat(Point{5, 7, 9}, 1), (Point{5, 9}));
    EXPECT_EQ(hat(Point{3}, 0), Point{});
    EXPECT_EQ(hat(Point{1, 2}, 0), Point{2});
    EXPECT_THROW(hat(Point{1, 2}, 2), InputError);
}

TEST(Hat, ReinsertionIsIdentity) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 5;
        const Point x = instances::random_point(rng, n, -5.0, 5.0);
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(insert_coordinate(hat(x, i), i, x[i]), x);
    }
}

TEST(Clamp, Examples) {
    EXPECT_EQ(clamp(0.0, 1.0, 2.0), 1.0);
    EXPECT_EQ(clamp(ExtendedReal::neg_inf(), 3.0, 5.0), 3.0);
    EXPECT_EQ(clamp(-1.0, 4.0, 0.5), 0.5);
    EXPECT_EQ(clamp(ExtendedReal::neg_inf(), ExtendedReal::pos_inf(), -7.0), -7.0);
    EXPECT_THROW(clamp(2.0, 1.0, 0.0), InputError);
}

TEST(Clamp, MatchesMedianOracle) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 2000; ++t) {
        double a = u(rng), b = u(rng);
        if (a > b) std::swap(a, b);
        const double x = u(rng);
        EXPECT_EQ(clamp(a, b, x), oracle::clamp(a, b, x));
    }
}

TEST(Clamp, JointlyOneLipschitz) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int t = 0; t < 10000; ++t) {
        double a = u(rng), b = u(rng), a2 = u(rng), b2 = u(rng);
        if (a > b) std::swap(a, b);
        if (a2 > b2) std::swap(a2, b2);
        const double x = u(rng), x2 = u(rng);
        const double lhs = std::fabs(clamp(a, b, x) - clamp(a2, b2, x2));
        const double rhs = std::max({std::fabs(a - a2), std::fabs(b - b2), std::fabs(x - x2)});
        EXPECT_LE(lhs, rhs);
    }
}

TEST(Cone, Examples) {
    const ConeDescriptor c{Point{0, 0}, 0, Sign::Plus};
    EXPECT_TRUE(cone_contains(c, Point{2, 1}));
    EXPECT_FALSE(cone_contains(c, Point{1, 2}));
    EXPECT_TRUE(cone_contains(c, Point{1, 1}));
    EXPECT_FALSE(cone_contains(c, Point{1, 1}, true));
    const ConeDescriptor down{Point{0, 0}, 1, Sign::Minus};
    EXPECT_TRUE(cone_contains(down, Point{0.5, -3}));
    EXPECT_FALSE(cone_contains(down, Point{0, 3}));
}

TEST(Cone, GeneralExamples) {
    EXPECT_TRUE(cone_contains_general(Point{0, 0}, Point{1, 0}, Point{2, 0}));
    EXPECT_FALSE(cone_contains_general(Point{0, 0}, Point{1, 0}, Point{0, 1}));
    EXPECT_TRUE(cone_contains_general(Point{1, 1}, Point{1, 1}, Point{1, 1}));
}

// q in C(x, +i) iff q in C(x - e_i, x), and the mirror for -i.
TEST(Cone, AxisFormMatchesGeneralForm) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int t = 0; t < 4000; ++t) {
        const std::size_t n = 1 + t % 4;
        // Quarter-integer coordinates land on cone boundaries often and exactly.
        Point x = instances::random_point(rng, n, -2.0, 2.0);
        Point q = instances::random_point(rng, n, -3.0, 3.0);
        for (std::size_t j = 0; j < n; ++j) {
            x[j] = std::round(4.0 * x[j]) / 4.0;
            q[j] = std::round(4.0 * q[j]) / 4.0;
        }
        const std::size_t i = t % n;
        const Sign s = coin(rng) ? Sign::Plus : Sign::Minus;
        Point p = x;
        p[i] -= sign_value(s);
        EXPECT_EQ(cone_contains({x, i, s}, q), cone_contains_general(p, x, q, 1e-12)) << "t=" << t;
    }
}

TEST(Hausdorff, Examples) {
    const std::vector<Point> a{{0, 0}, {3, 0}};
    EXPECT_EQ(hausdorff_distance(a, a), 0.0);
    EXPECT_EQ(hausdorff_distance(std::vector<Point>{{0, 0}}, std::vector<Point>{{1, 0}, {0, 2}}), 2.0);
    EXPECT_EQ(hausdorff_distance(a, std::vector<Point>{{1, 0}}), 2.0);
    EXPECT_THROW(hausdorff_distance(std::vector<Point>{}, a), InputError);
}

TEST(Hausdorff, MatchesThresholdOracleAndIsAMetric) {
    std::mt19937_64 rng(23);
    auto random_set = [&](std::size_t count) {
        std::vector<Point> s;
        for (std::size_t k = 0; k < count; ++k) s.push_back(instances::random_point(rng, 2, -3.0, 3.0));
        return s;
    };
    for (int t = 0; t < 300; ++t) {
        const auto a = random_set(1 + t % 5), b = random_set(1 + (t / 5) % 5), c = random_set(1 + t % 3);
        const double ab = hausdorff_distance(a, b);
        EXPECT_EQ(ab, oracle::hausdorff(a, b));
        EXPECT_EQ(ab, hausdorff_distance(b, a));
        EXPECT_LE(hausdorff_distance(a, c), ab + hausdorff_distance(b, c) + 1e-12);
    }
}

TEST(BoxTest, GridPointsAreLexicographic) {
    const auto g = grid_points(Box::cube(2, 0.0, 1.0), 0.5);
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front(), (Point{0, 0}));
    EXPECT_EQ(g[1], (Point{0, 0.5}));
    EXPECT_EQ(g.back(), (Point{1, 1}));
    EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(BoxTest, HatDropsAxis) {
    const Box b{Point{0, 1, 2}, Point{3, 4, 5}};
    const Box h = b.hat(1);
    EXPECT_EQ(h.lo, (Point{0, 2}));
    EXPECT_EQ(h.hi, (Point{3, 5}));
    EXPECT_TRUE(b.contains(Point{1, 2, 3}));
    EXPECT_FALSE(b.contains(Point{1, 5, 3}));
}

}  // namespace
}  // namespace hyperlip
