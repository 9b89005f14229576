#include <benchmark/benchmark.h>

#include <cmath>

#include "gaussloc/integrands.hpp"
#include "gaussloc/kernels.hpp"
#include "gaussloc/quadrature.hpp"

namespace {

using namespace gaussloc;

void BM_GaussKronrod1d(benchmark::State& state) {
    for (auto _ : state) {
        auto r = integrate_1d([](double t) { return std::pow(t, -0.5); }, 1e-6, 1.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_GaussKronrod1d);

void BM_Cubature2d(benchmark::State& state) {
    const CovKernel kernel = CovKernel::fbm(0.5);
    const CriterionIntegral crit = make_existence_criterion(kernel, {0.0}, 1);
    auto f = [&](std::span<const double> x) {
        return crit.singular_dist(x) >= 0.125 ? crit.f(x) : 0.0;
    };
    for (auto _ : state) {
        auto r = integrate(f, crit.box, 1e-5, 1e-12, 200000);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Cubature2d);

void BM_Cubature4d(benchmark::State& state) {
    const CovKernel base = CovKernel::fbm(0.5);
    Domain i_rect, j_rect;
    i_rect.bounds = {{0.0, 0.4}};
    j_rect.bounds = {{0.6, 1.0}};
    const CovKernel vfield = CovKernel::self_intersection(base, i_rect, j_rect);
    const CriterionIntegral crit = make_self_criterion(vfield, 1, SelfVariant::J, false);
    auto f = [&](std::span<const double> x) {
        return crit.singular_dist(x) >= 0.125 ? crit.f(x) : 0.0;
    };
    for (auto _ : state) {
        auto r = integrate(f, crit.box, 1e-4, 1e-12, 200000);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Cubature4d);

}  // namespace
