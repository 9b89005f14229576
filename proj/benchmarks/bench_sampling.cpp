#include <benchmark/benchmark.h>

#include "gaussloc/gram.hpp"
#include "gaussloc/kernels.hpp"
#include "gaussloc/local_time.hpp"
#include "gaussloc/rng.hpp"

namespace {

using namespace gaussloc;

PointList line_grid(int n) {
    PointList pts;
    for (int i = 0; i < n; ++i) pts.push_back({(i + 0.5) / n});
    return pts;
}

void BM_GramCholesky(benchmark::State& state) {
    const CovKernel kernel = CovKernel::fbm(0.5);
    const PointList pts = line_grid(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto g = gram_matrix(kernel, pts);
        benchmark::DoNotOptimize(g.jitter_used);
    }
}
BENCHMARK(BM_GramCholesky)->Arg(64)->Arg(256);

void BM_SampleField(benchmark::State& state) {
    const CovKernel kernel = CovKernel::fbm(0.5);
    const PointList pts = line_grid(64);
    std::uint64_t rep = 0;
    for (auto _ : state) {
        auto s = sample_field(kernel, pts, 1, 42, rep++);
        benchmark::DoNotOptimize(s.values(0, 0));
    }
}
BENCHMARK(BM_SampleField);

void BM_CounterRngNormal(benchmark::State& state) {
    const CounterRng rng(7);
    std::uint64_t n = 0;
    for (auto _ : state) benchmark::DoNotOptimize(rng.normal(1, n++));
}
BENCHMARK(BM_CounterRngNormal);

void BM_LEpsReplicate(benchmark::State& state) {
    const CovKernel kernel = CovKernel::fbm(0.5);
    GridSpec grid;
    grid.points_per_axis = 64;
    grid.domain = kernel.domain();
    const std::vector<double> x{0.0};
    for (auto _ : state) {
        auto e = l_eps_mc(kernel, 1, x, 0.5, grid, 50, 42);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_LEpsReplicate);

}  // namespace

BENCHMARK_MAIN();
