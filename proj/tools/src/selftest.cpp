#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hyperlip/boxset.hpp"
#include "hyperlip/extension.hpp"
#include "hyperlip/hull.hpp"
#include "hyperlip/instances.hpp"
#include "hyperlip/json_io.hpp"
#include "hyperlip/reconstruct.hpp"
#include "hyperlip_cli/cli.hpp"

namespace hyperlip::cli {

namespace {

using Json = nlohmann::json;

Json check(std::string name, bool pass, Json detail) {
    return Json{{"name", std::move(name)}, {"pass", pass}, {"detail", std::move(detail)}};
}

Json cyclic_check(std::mt19937_64& rng) {
    std::size_t instances = 0, bound_failures = 0, violation_failures = 0;
    double worst_violation = 0.0;
    for (std::size_t n : {2, 3, 4}) {
        for (double lambda : {0.3, 0.5, 0.9}) {
            const auto q = instances::random_set(rng, n, lambda);
            for (int s = 0; s < 3; ++s) {
                const Point x = instances::random_point(rng, n, -3.0, 3.0);
                const auto res = cyclic_retract(q, x, 1e-6);
                const auto& d = res.trace.displacements;
                for (std::size_t m = n + 1; m <= d.size(); ++m) {
                    double prev = 0.0;
                    for (std::size_t k = m - n + 1; k < m; ++k) prev = std::max(prev, std::fabs(d[k - 1]));
                    if (std::fabs(d[m - 1]) > q.lambda() * prev + 1e-9) ++bound_failures;
                }
                const double v = violation(q, res.point);
                worst_violation = std::max(worst_violation, v);
                if (v > 1e-6) ++violation_failures;
                ++instances;
            }
        }
    }
    return check("cyclic_retract decay and violation", bound_failures == 0 && violation_failures == 0,
                 Json{{"runs", instances}, {"decay_failures", bound_failures}, {"worst_violation", worst_violation}});
}

Json lambda_one_check() {
    const auto q = instances::rotating_pair();
    const auto res = retract_lambda_one_bounded(q, Point{0.0, 1.0}, 1e-3, Box::cube(2, -2.0, 2.0));
    const double v = violation(q, res.point);
    return check("lambda = 1 bounded retraction", v <= 1e-3 && v <= res.violation_bound,
                 Json{{"point", io::to_json(res.point)}, {"violation", v}, {"k", res.k}});
}

Json stall_check() {
    const auto trace = iterate_cyclic(instances::drifting_pair(), Point{0.0, 0.0}, 200);
    const Verdict verdict = detect_noncontraction(trace, 8);
    return check("empty set iteration stalls", verdict == Verdict::Stalled,
                 Json{{"verdict", to_string(verdict)}, {"final", io::to_json(trace.final_point)}});
}

Json hull_check() {
    const FiniteMetricSpace two({{0.0, 1.0}, {1.0, 0.0}});
    const auto points = enumerate_extremal_grid(two, 0.1);
    return check("two-point hull segment", points.size() == 11, Json{{"count", points.size()}});
}

Json kuratowski_check(std::mt19937_64& rng) {
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
        const auto space = instances::random_metric_space(rng, 8);
        const auto image = kuratowski_embed(space, 0);
        for (std::size_t i = 0; i < space.size(); ++i) {
            for (std::size_t j = 0; j < space.size(); ++j) {
                worst = std::max(worst, std::fabs(sup_dist(image[i], image[j]) - space(i, j)));
            }
        }
    }
    return check("Kuratowski embedding isometry", worst <= 1e-12, Json{{"worst_error", worst}});
}

Json extension_check(std::mt19937_64& rng) {
    std::size_t failures = 0, mismatches = 0, skipped = 0;
    for (int t = 0; t < 3; ++t) {
        const auto space = instances::random_metric_space(rng, 10);
        const auto q = instances::random_set(rng, 2, 0.5, false);
        const std::vector<std::size_t> subset = {0, 1, 2};
        // a -> (d(a,0), d(a,1)) is 1-Lipschitz into l_inf^2; retracting keeps that.
        std::vector<Point> phi;
        for (std::size_t a : subset) {
            const auto p = cyclic_retract(q, Point{space(a, 0), space(a, 1)}, 1e-9).point;
            phi.push_back(p);
        }
        bool exact = true;
        for (const auto& p : phi) exact = exact && violation(q, p) == 0.0;
        if (!exact) {
            ++skipped;
            continue;
        }
        const auto image = extend_into_q(space, subset, phi, q, RetractOptions{});
        for (std::size_t a = 0; a < subset.size(); ++a) mismatches += image[subset[a]] == phi[a] ? 0 : 1;
        failures += check_map_lipschitz(space, image).failures;
    }
    return check("extension into Q", failures == 0 && mismatches == 0,
                 Json{{"lipschitz_failures", failures}, {"mismatches_on_A", mismatches}, {"skipped", skipped}});
}

Json reconstruct_check() {
    const Box unit = Box::cube(2, 0.0, 1.0);
    const auto member = [&](const Point& x) { return unit.contains(x); };
    ReconstructionConfig config;
    for (const auto& p : grid_points(Box::cube(2, -1.0, 2.0), 0.25)) {
        (member(p) ? config.inside : config.outside).push_back(p);
    }
    config.membership = member;
    const auto rec = synthesize_bounds(config, 2);
    const auto on_samples = verify_reconstruction(member, rec.set, grid_points(Box::cube(2, -1.0, 2.0), 0.25));
    const auto finer = verify_reconstruction(member, rec.set, grid_points(Box::cube(2, -1.0, 2.0), 0.125));
    return check("reconstruct unit square", on_samples.exact() && finer.false_outside.empty(),
                 Json{{"cones", rec.cones.size()},
                      {"sample_grid_mismatches", on_samples.false_inside.size() + on_samples.false_outside.size()},
                      {"fine_grid_false_outside", finer.false_outside.size()}});
}

}  // namespace

Json selftest_report(unsigned long long seed) {
    std::mt19937_64 rng(seed);
    Json checks = Json::array();
    checks.push_back(cyclic_check(rng));
    checks.push_back(lambda_one_check());
    checks.push_back(stall_check());
    checks.push_back(hull_check());
    checks.push_back(kuratowski_check(rng));
    checks.push_back(extension_check(rng));
    checks.push_back(reconstruct_check());
    bool all = true;
    for (const auto& c : checks) all = all && c["pass"].get<bool>();
    return Json{{"seed", seed}, {"checks", checks}, {"pass", all}};
}

}  // namespace hyperlip::cli
