#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperlip/geometry.hpp"

namespace hyperlip {

using DistanceMatrix = std::vector<std::vector<double>>;

struct AxiomViolation {
    enum class Kind { NotSquare, NonFinite, Asymmetric, NonzeroDiagonal, NonPositive, Triangle };
    Kind kind;
    /// Witness indices: (i,j) for pairwise axioms, (i,k,j) for the triangle
    /// d(i,j) > d(i,k) + d(k,j).
    std::vector<std::size_t> witness;
};

struct MetricReport {
    std::vector<AxiomViolation> violations;
    bool valid() const noexcept { return violations.empty(); }
};

const char* to_string(AxiomViolation::Kind kind) noexcept;

/// Every violated axiom with its witness indices. Never throws on
/// non-square input; that is reported as NotSquare.
MetricReport check_metric_axioms(const DistanceMatrix& d, double tol = kDefaultTol);

/// A finite metric space given by its distance matrix. Construction
/// validates the metric axioms.
class FiniteMetricSpace {
public:
    explicit FiniteMetricSpace(const DistanceMatrix& d, double tol = kDefaultTol);

    /// The sup-norm metric on a list of points of equal dimension.
    static FiniteMetricSpace from_points(const std::vector<Point>& pts);

    std::size_t size() const noexcept { return size_; }
    double operator()(std::size_t i, std::size_t j) const { return dist_[i * size_ + j]; }
    /// The distance function d_x as a row.
    std::vector<double> row(std::size_t i) const;
    DistanceMatrix matrix() const;
    double diameter() const;

private:
    std::size_t size_ = 0;
    std::vector<double> dist_;
};

}  // namespace hyperlip
