#include "hyperlip_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hyperlip/errors.hpp"
#include "hyperlip/extension.hpp"
#include "hyperlip/hull.hpp"
#include "hyperlip/json_io.hpp"
#include "hyperlip/metric_space.hpp"
#include "hyperlip/reconstruct.hpp"

namespace hyperlip::cli {

namespace {

using Json = nlohmann::json;

// File path, or inline JSON when the argument starts with '[' or '{'.
Json load(const std::string& arg) {
    const auto pos = arg.find_first_not_of(" \t\n");
    if (pos != std::string::npos && (arg[pos] == '[' || arg[pos] == '{')) return io::parse(arg);
    return io::read_file(arg);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Distance matrix, or {"points": [...]} under the sup metric.
FiniteMetricSpace load_space(const std::string& arg) {
    const Json j = load(arg);
    if (j.is_object() && j.contains("points")) return FiniteMetricSpace::from_points(io::points_from_json(j["points"]));
    return FiniteMetricSpace(io::matrix_from_json(j));
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw InputError("subset: expected comma-separated indices, got '" + text + "'");
        }
        out.push_back(std::stoul(item));
    }
    if (out.empty()) throw InputError("subset must not be empty");
    return out;
}

std::vector<Point> load_grid(const std::string& grid, const std::string& box, double step) {
    if (!grid.empty()) return io::points_from_json(load(grid));
    if (box.empty()) throw InputError("either --grid or --box with --step is required");
    if (!(step > 0.0)) throw InputError("--step must be positive");
    return grid_points(io::box_from_json(load(box)), step);
}

Json trace_summary(const IterationTrace& trace) {
    return Json{{"steps", trace.steps()},
                {"sweeps", trace.sweeps()},
                {"initial_block_max", trace.initial_block_max()},
                {"last_window_max", trace.tail_max(trace.dim())}};
}

struct RetractArgs {
    std::string set, point, witness, box, trace_csv;
    double tol = 1e-6;
    std::size_t max_sweeps = 1'000'000;
};

int cmd_retract(const RetractArgs& a, std::ostream& out, std::ostream& err) {
    const auto q = io::boxset_from_json(load(a.set));
    const Point x = io::point_from_json(load(a.point));
    if (x.size() != q.dim()) throw DimensionMismatch(q.dim(), x.size());
    if (!(a.tol > 0.0)) throw InputError("--tol must be positive");
    if (q.lambda() > 1.0) throw InputError("lambda(Q) > 1: no retraction construction applies");

    RetractOptions options;
    options.tol = a.tol;
    options.max_sweeps = a.max_sweeps;
    if (!a.witness.empty()) options.witness = io::point_from_json(load(a.witness));
    if (!a.box.empty()) options.box = io::box_from_json(load(a.box));

    if (q.lambda() >= 1.0 && !options.witness && !options.box) {
        options.box = find_invariant_box(q, x);
        if (!options.box) {
            // No construction applies. Tell a non-contracting orbit (an empty
            // or unreachable Q) apart from a plain missing witness.
            const std::size_t window = 4 * q.dim();
            const auto trace = iterate_cyclic(q, x, std::max<std::size_t>(200, 2 * window));
            const Verdict verdict = detect_noncontraction(trace, window);
            if (verdict == Verdict::Stalled) {
                emit(out, Json{{"verdict", to_string(verdict)},
                               {"point", io::to_json(trace.final_point)},
                               {"violation", violation(q, trace.final_point)},
                               {"trace_summary", trace_summary(trace)}});
                err << Json{{"error", "stalled"}, {"message", "cyclic iteration does not contract"}}.dump() << '\n';
                return kExitContract;
            }
            throw Unsupported("lambda(Q) = 1 with unbounded bounds: --witness (a member of Q) is required");
        }
    }

    const Retraction r = retract(q, x, options);
    if (!a.trace_csv.empty()) io::write_file(a.trace_csv, trace_csv(r.trace));
    emit(out, Json{{"verdict", "converged"},
                   {"method", to_string(r.method)},
                   {"point", io::to_json(r.point)},
                   {"violation", violation(q, r.point)},
                   {"violation_bound", r.violation_bound},
                   {"k", r.k},
                   {"sweeps", r.trace.sweeps()},
                   {"trace_summary", trace_summary(r.trace)}});
    return kExitOk;
}

struct ExtendArgs {
    std::string space, subset, map, set, witness;
    double tol = 1e-6;
};

int cmd_extend(const ExtendArgs& a, std::ostream& out) {
    const auto space = load_space(a.space);
    const auto subset = parse_indices(a.subset);
    const auto phi = io::points_from_json(load(a.map));
    const auto q = io::boxset_from_json(load(a.set));
    RetractOptions options;
    options.tol = a.tol;
    if (!a.witness.empty()) options.witness = io::point_from_json(load(a.witness));

    const auto image = extend_into_q(space, subset, phi, q, options);
    Json violations = Json::array();
    for (const auto& p : image) violations.push_back(violation(q, p));
    const auto summary = check_map_lipschitz(space, image);
    emit(out, Json{{"image", io::to_json(image)},
                   {"violations", violations},
                   {"lipschitz", Json{{"pairs", summary.pairs},
                                      {"failures", summary.failures},
                                      {"worst_excess", summary.worst_excess}}}});
    return summary.failures == 0 ? kExitOk : kExitContract;
}

int cmd_hull(const std::string& metric, double resolution, std::ostream& out) {
    if (!(resolution > 0.0)) throw InputError("--resolution must be positive");
    const auto space = load_space(metric);
    emit(out, Json(enumerate_extremal_grid(space, resolution)));
    return kExitOk;
}

struct ReconstructArgs {
    std::string inside, outside, verify_grid;
    double a = kDefaultConeShrink;
};

int cmd_reconstruct(const ReconstructArgs& args, std::ostream& out) {
    ReconstructionConfig config;
    config.a = args.a;
    config.inside = io::points_from_json(load(args.inside));
    config.outside = io::points_from_json(load(args.outside));
    if (config.inside.empty()) throw InputError("--inside must contain at least one point");
    const std::size_t n = config.inside.front().size();
    // The only membership information available is the inside sample itself.
    const std::set<Point> members(config.inside.begin(), config.inside.end());
    const auto member = [&members](const Point& x) { return members.contains(x); };
    config.membership = member;

    const auto rec = synthesize_bounds(config, n);
    Json cones = Json::array();
    for (const auto& c : rec.cones) {
        cones.push_back(Json{{"x", io::to_json(c.x)},
                             {"epsilon", c.epsilon},
                             {"p", io::to_json(c.p)},
                             {"cone", io::to_json(c.cone)}});
    }
    Json result{{"set", io::to_json(rec.set)}, {"cones", cones}};
    if (!args.verify_grid.empty()) {
        const auto grid = io::points_from_json(load(args.verify_grid));
        const auto report = verify_reconstruction(member, rec.set, grid);
        result["report"] = Json{{"exact", report.exact()},
                                {"false_inside", io::to_json(report.false_inside)},
                                {"false_outside", io::to_json(report.false_outside)},
                                {"inconsistent", io::to_json(report.inconsistent)}};
    }
    emit(out, result);
    return kExitOk;
}

struct VerifyLipschitzArgs {
    std::string expr, grid, box;
    double step = 0.0;
    double lambda = 1.0;
    double tol = kDefaultTol;
};

int cmd_verify_lipschitz(const VerifyLipschitzArgs& a, std::ostream& out) {
    const auto f = io::lipexpr_from_json(load(a.expr));
    const auto grid = load_grid(a.grid, a.box, a.step);
    const auto c = verify_lipschitz_on_grid(f, grid, a.lambda, a.tol);
    Json result{{"ok", c.ok}, {"grid_points", grid.size()}};
    if (!f.is_infinite()) result["lip_bound"] = lip_bound(f);
    if (!c.ok) {
        result["witness"] = Json{{"first", io::to_json(grid[c.first])},
                                 {"second", io::to_json(grid[c.second])},
                                 {"value_gap", c.value_gap},
                                 {"allowed", c.allowed}};
    }
    emit(out, result);
    return c.ok ? kExitOk : kExitContract;
}

int cmd_verify_metric(const std::string& metric, double tol, std::ostream& out) {
    const auto report = check_metric_axioms(io::matrix_from_json(load(metric)), tol);
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(Json{{"kind", to_string(v.kind)}, {"witness", v.witness}});
    }
    emit(out, Json{{"ok", report.valid()}, {"violations", violations}});
    return report.valid() ? kExitOk : kExitContract;
}

struct PlotArgs {
    std::string set, out, box, start, orbit, cones;
    double resolution = 0.05;
    std::size_t steps = 8;
    int pixels = 400;
};

int cmd_plot(const PlotArgs& a, std::ostream& out) {
    const auto q = io::boxset_from_json(load(a.set));
    PlotOptions options;
    options.resolution = a.resolution;
    options.pixels = a.pixels;
    if (!a.box.empty()) options.view = io::box_from_json(load(a.box));
    if (!a.orbit.empty()) options.orbit = io::points_from_json(load(a.orbit));
    if (!a.start.empty()) {
        const Point x = io::point_from_json(load(a.start));
        if (x.size() != q.dim()) throw DimensionMismatch(q.dim(), x.size());
        options.orbit = iterate_cyclic(q, x, a.steps).iterates();
    }
    if (!a.cones.empty()) {
        const Json cones = load(a.cones);
        if (!cones.is_array()) throw InputError("--cones: expected an array of cones");
        for (const auto& c : cones) options.cones.push_back(io::cone_from_json(c));
    }
    const std::string svg = render_svg(q, options);
    if (a.out.empty()) {
        out << svg;
    } else {
        io::write_file(a.out, svg);
    }
    return kExitOk;
}

int cmd_selftest(unsigned long long seed, const std::string& path, std::ostream& out) {
    const Json report = selftest_report(seed);
    const std::string text = report.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        io::write_file(path, text);
    }
    return report["pass"].get<bool>() ? kExitOk : kExitContract;
}

int report_error(std::ostream& err, const char* kind, const std::string& message, Json extra = Json::object()) {
    extra["error"] = kind;
    extra["message"] = message;
    err << extra.dump() << '\n';
    return std::string(kind) == "contract" || std::string(kind) == "max_sweeps" ? kExitContract : kExitInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Injective subsets of l_inf^n: retractions, extensions, hulls, reconstruction", "hyperlip"};
    app.require_subcommand(1);

    RetractArgs retract_args;
    auto* retract = app.add_subcommand("retract", "1-Lipschitz retraction of a point onto Q");
    retract->add_option("--set", retract_args.set, "BoxLipschitzSet JSON")->required();
    retract->add_option("--point", retract_args.point, "point JSON")->required();
    retract->add_option("--tol", retract_args.tol, "violation tolerance");
    retract->add_option("--witness", retract_args.witness, "a member of Q (lambda = 1, unbounded)");
    retract->add_option("--box", retract_args.box, "invariant box {lo, hi} (lambda = 1)");
    retract->add_option("--max-sweeps", retract_args.max_sweeps, "sweep budget");
    retract->add_option("--trace-csv", retract_args.trace_csv, "write displacement trace as CSV");

    ExtendArgs extend_args;
    auto* extend = app.add_subcommand("extend", "extend a 1-Lipschitz map A -> Q to B");
    extend->add_option("--space", extend_args.space, "distance matrix, or {\"points\": [...]}")->required();
    extend->add_option("--subset", extend_args.subset, "comma-separated indices of A in B")->required();
    extend->add_option("--map", extend_args.map, "images of A, one point per index")->required();
    extend->add_option("--set", extend_args.set, "target BoxLipschitzSet JSON")->required();
    extend->add_option("--tol", extend_args.tol, "retraction tolerance");
    extend->add_option("--witness", extend_args.witness, "a member of Q (lambda = 1, unbounded)");

    std::string hull_metric;
    double hull_resolution = 0.1;
    auto* hull = app.add_subcommand("hull", "injective hull of a finite metric space");
    hull->require_subcommand(1);
    auto* hull_enumerate = hull->add_subcommand("enumerate", "grid scan for extremal functions");
    hull_enumerate->add_option("--metric", hull_metric, "distance matrix JSON")->required();
    hull_enumerate->add_option("--resolution", hull_resolution, "grid step");

    ReconstructArgs reconstruct_args;
    auto* reconstruct = app.add_subcommand("reconstruct", "bounding functions from inside/outside samples");
    reconstruct->add_option("--inside", reconstruct_args.inside, "points of Q")->required();
    reconstruct->add_option("--outside", reconstruct_args.outside, "points off Q")->required();
    reconstruct->add_option("--a", reconstruct_args.a, "cone shrink factor, 0 < a < 1/8");
    reconstruct->add_option("--verify-grid", reconstruct_args.verify_grid, "points to compare against the sample");

    auto* verify = app.add_subcommand("verify", "grid checks");
    verify->require_subcommand(1);
    VerifyLipschitzArgs lip_args;
    auto* verify_lip = verify->add_subcommand("lipschitz", "sampled Lipschitz check of a LipExpr");
    verify_lip->add_option("--expr", lip_args.expr, "LipExpr JSON")->required();
    verify_lip->add_option("--lambda", lip_args.lambda, "Lipschitz constant");
    verify_lip->add_option("--grid", lip_args.grid, "array of points");
    verify_lip->add_option("--box", lip_args.box, "box {lo, hi}; used with --step");
    verify_lip->add_option("--step", lip_args.step, "grid step inside --box");
    verify_lip->add_option("--tol", lip_args.tol, "absolute slack");
    std::string metric_path;
    double metric_tol = kDefaultTol;
    auto* verify_metric = verify->add_subcommand("metric", "metric axioms of a distance matrix");
    verify_metric->add_option("--metric", metric_path, "distance matrix JSON")->required();
    verify_metric->add_option("--tol", metric_tol, "triangle slack");

    PlotArgs plot_args;
    auto* plot = app.add_subcommand("plot", "SVG of an n = 2 set");
    plot->add_option("--set", plot_args.set, "BoxLipschitzSet JSON")->required();
    plot->add_option("--out", plot_args.out, "output path (default stdout)");
    plot->add_option("--box", plot_args.box, "view box {lo, hi} (default [-2,2]^2)");
    plot->add_option("--resolution", plot_args.resolution, "raster cell size");
    plot->add_option("--start", plot_args.start, "start point of a cyclic orbit");
    plot->add_option("--steps", plot_args.steps, "orbit length");
    plot->add_option("--orbit", plot_args.orbit, "explicit polyline points");
    plot->add_option("--cones", plot_args.cones, "array of cones");
    plot->add_option("--pixels", plot_args.pixels, "image size");

    unsigned long long seed = 0;
    std::string selftest_out;
    auto* selftest = app.add_subcommand("selftest", "deterministic self-check report");
    selftest->add_option("--seed", seed, "random seed");
    selftest->add_option("--out", selftest_out, "output path (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*retract) return cmd_retract(retract_args, out, err);
        if (*extend) return cmd_extend(extend_args, out);
        if (*hull_enumerate) return cmd_hull(hull_metric, hull_resolution, out);
        if (*reconstruct) return cmd_reconstruct(reconstruct_args, out);
        if (*verify_lip) return cmd_verify_lipschitz(lip_args, out);
        if (*verify_metric) return cmd_verify_metric(metric_path, metric_tol, out);
        if (*plot) return cmd_plot(plot_args, out);
        if (*selftest) return cmd_selftest(seed, selftest_out, out);
    } catch (const NotLipschitz& e) {
        return report_error(err, "not_lipschitz", e.what(),
                            Json{{"first", e.first}, {"second", e.second}, {"value_gap", e.value_gap},
                                 {"allowed", e.allowed}});
    } catch (const InconsistentBounds& e) {
        return report_error(err, "inconsistent_bounds", e.what(),
                            Json{{"coordinate", e.coordinate}, {"at", e.at}, {"lower", e.lower}, {"upper", e.upper}});
    } catch (const InputError& e) {
        return report_error(err, "input", e.what());
    } catch (const MaxSweepsExceeded& e) {
        return report_error(err, "max_sweeps", e.what(), Json{{"sweeps", e.sweeps}, {"last_window", e.last_window}});
    } catch (const ContractError& e) {
        return report_error(err, "contract", e.what());
    } catch (const nlohmann::json::exception& e) {
        return report_error(err, "input", e.what());
    }
    return kExitInput;
}

}  // namespace hyperlip::cli
