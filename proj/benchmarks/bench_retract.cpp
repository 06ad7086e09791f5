#include <benchmark/benchmark.h>

#include <random>

#include "hyperlip/boxset.hpp"
#include "hyperlip/instances.hpp"

namespace {

using namespace hyperlip;

// args: n, lambda * 10
void BM_CyclicRetract(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double lambda = static_cast<double>(state.range(1)) / 10.0;
    std::mt19937_64 rng(1);
    const auto q = instances::random_set(rng, n, lambda);
    std::vector<Point> starts;
    for (int k = 0; k < 64; ++k) starts.push_back(instances::random_point(rng, n, -5.0, 5.0));
    std::size_t k = 0, steps = 0;
    for (auto _ : state) {
        const auto r = cyclic_retract(q, starts[k++ % starts.size()], 1e-6);
        steps += r.trace.steps();
        benchmark::DoNotOptimize(r.point);
    }
    state.counters["steps/op"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_CyclicRetract)->ArgsProduct({{2, 3, 4}, {3, 5, 9}});

void BM_LambdaOneBounded(benchmark::State& state) {
    const double tol = 1.0 / static_cast<double>(state.range(0));
    const auto q = instances::rotating_pair();
    const Box box = Box::cube(2, -2.0, 2.0);
    for (auto _ : state) {
        const auto r = retract_lambda_one_bounded(q, Point{0.7, -1.3}, tol, box);
        benchmark::DoNotOptimize(r.point);
    }
}
BENCHMARK(BM_LambdaOneBounded)->RangeMultiplier(10)->Range(10, 1000);

}  // namespace
