#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// it can be driven from tests.
//
// Exit codes: 0 success, 1 input error (bad arguments, malformed JSON,
// instance outside an operation's hypotheses), 2 mathematical failure
// (stalled iteration, exhausted sweep budget, failed verification).

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperlip/boxset.hpp"

namespace hyperlip::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitContract = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Deterministic self-check battery; the report depends only on the seed.
nlohmann::json selftest_report(unsigned long long seed);

struct PlotOptions {
    Box view = Box::cube(2, -2.0, 2.0);
    double resolution = 0.05;
    std::vector<Point> orbit;
    std::vector<ConeDescriptor> cones;
    int pixels = 400;
};

/// SVG of an n = 2 set: grid-rasterized region, orbit polyline, cone outlines.
std::string render_svg(const BoxLipschitzSet& q, const PlotOptions& options);

}  // namespace hyperlip::cli
