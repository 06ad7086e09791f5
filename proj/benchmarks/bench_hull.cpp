#include <benchmark/benchmark.h>

#include <random>

#include "hyperlip/hull.hpp"
#include "hyperlip/instances.hpp"

namespace {

using namespace hyperlip;

// arg: |X|
void BM_EnumerateExtremal(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto space = instances::random_metric_space(rng, static_cast<std::size_t>(state.range(0)));
    std::size_t found = 0;
    for (auto _ : state) {
        const auto e = enumerate_extremal_grid(space, 0.25);
        found = e.size();
        benchmark::DoNotOptimize(e.data());
    }
    state.counters["extremal"] = static_cast<double>(found);
}
BENCHMARK(BM_EnumerateExtremal)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace
