#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include "hyperlip/reconstruct.hpp"

namespace {

using namespace hyperlip;

bool notched(const Point& p) {
    return p[0] >= 0 && p[0] <= 2 && p[1] >= 0 && p[1] <= 2 && p[0] <= 1 + std::min(p[1], 1.0);
}

// arg: grid cells per unit
void BM_SynthesizeNotched(benchmark::State& state) {
    const double step = 1.0 / static_cast<double>(state.range(0));
    ReconstructionConfig cfg;
    for (const auto& p : grid_points(Box::cube(2, -1.0, 3.0), step)) (notched(p) ? cfg.inside : cfg.outside).push_back(p);
    for (auto _ : state) {
        const auto rec = synthesize_bounds(cfg, 2);
        benchmark::DoNotOptimize(rec.cones.data());
    }
    state.counters["exterior"] = static_cast<double>(cfg.outside.size());
}
BENCHMARK(BM_SynthesizeNotched)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
