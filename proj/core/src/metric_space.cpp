#include "hyperlip/metric_space.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlip/errors.hpp"

namespace hyperlip {

const char* to_string(AxiomViolation::Kind kind) noexcept {
    switch (kind) {
        case AxiomViolation::Kind::NotSquare: return "not_square";
        case AxiomViolation::Kind::NonFinite: return "non_finite";
        case AxiomViolation::Kind::Asymmetric: return "symmetry";
        case AxiomViolation::Kind::NonzeroDiagonal: return "zero_diagonal";
        case AxiomViolation::Kind::NonPositive: return "positivity";
        case AxiomViolation::Kind::Triangle: return "triangle";
    }
    return "unknown";
}

MetricReport check_metric_axioms(const DistanceMatrix& d, double tol) {
    using K = AxiomViolation::Kind;
    MetricReport report;
    const std::size_t m = d.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (d[i].size() != m) {
            report.violations.push_back({K::NotSquare, {i}});
            return report;
        }
    }
    bool finite = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!std::isfinite(d[i][j])) {
                report.violations.push_back({K::NonFinite, {i, j}});
                finite = false;
            }
        }
    }
    if (!finite) return report;

    for (std::size_t i = 0; i < m; ++i) {
        if (std::abs(d[i][i]) > tol) report.violations.push_back({K::NonzeroDiagonal, {i, i}});
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::abs(d[i][j] - d[j][i]) > tol) report.violations.push_back({K::Asymmetric, {i, j}});
            if (d[i][j] <= tol || d[j][i] <= tol) report.violations.push_back({K::NonPositive, {i, j}});
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            for (std::size_t k = 0; k < m; ++k) {
                if (k == i || k == j) continue;
                if (d[i][j] > d[i][k] + d[k][j] + tol) report.violations.push_back({K::Triangle, {i, k, j}});
            }
        }
    }
    return report;
}

FiniteMetricSpace::FiniteMetricSpace(const DistanceMatrix& d, double tol) {
    const MetricReport report = check_metric_axioms(d, tol);
    if (!report.valid()) {
        const auto& v = report.violations.front();
        std::string msg = std::string("not a metric: ") + to_string(v.kind) + " at (";
        for (std::size_t k = 0; k < v.witness.size(); ++k) {
            if (k) msg += ",";
            msg += std::to_string(v.witness[k]);
        }
        throw InputError(msg + ")");
    }
    size_ = d.size();
    dist_.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) dist_[i * size_ + j] = d[i][j];
    }
}

FiniteMetricSpace FiniteMetricSpace::from_points(const std::vector<Point>& pts) {
    DistanceMatrix d(pts.size(), std::vector<double>(pts.size(), 0.0));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) d[i][j] = d[j][i] = sup_dist(pts[i], pts[j]);
    }
    return FiniteMetricSpace(d);
}

std::vector<double> FiniteMetricSpace::row(std::size_t i) const {
    if (i >= size_) throw InputError("point index out of range");
    return {dist_.begin() + static_cast<std::ptrdiff_t>(i * size_),
            dist_.begin() + static_cast<std::ptrdiff_t>((i + 1) * size_)};
}

DistanceMatrix FiniteMetricSpace::matrix() const {
    DistanceMatrix d(size_);
    for (std::size_t i = 0; i < size_; ++i) d[i] = row(i);
    return d;
}

double FiniteMetricSpace::diameter() const {
    double r = 0.0;
    for (double v : dist_) r = std::max(r, v);
    return r;
}

}  // namespace hyperlip
