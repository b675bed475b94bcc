// Micro-benchmarks for the hot paths: the exact recursion, ladder assembly,
// a full shooting solve, and the bounce quadrature.
//
//   ./ptcubic_benchmarks                     # all
//   ./ptcubic_benchmarks --benchmark_filter=Coefficients

#include "ptcubic/asymptotics.hpp"
#include "ptcubic/pade.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/quadrature.hpp"
#include "ptcubic/spectral.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ptcubic;

void BM_Coefficients(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        PerturbationSeries series = compute_coefficients(order);
        benchmark::DoNotOptimize(series.coefficients.data());
    }
    state.SetComplexityN(order);
}
BENCHMARK(BM_Coefficients)->Arg(10)->Arg(20)->Arg(46)->Complexity();

void BM_PadeLadder(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const PerturbationSeries series = compute_coefficients(2 * depth + 2);
    const Rat t(1, 64);
    for (auto _ : state) {
        PadeLadder lad = ladder(series, t, depth, 10);
        benchmark::DoNotOptimize(lad.diagonal.data());
    }
    state.SetComplexityN(depth);
}
BENCHMARK(BM_PadeLadder)->Arg(6)->Arg(12)->Arg(22)->Complexity();

void BM_SinglePade(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PerturbationSeries series = compute_coefficients(2 * n + 1);
    const std::vector<Rat> c = subtracted_series(series);
    for (auto _ : state) {
        PadeApproximant pa = build_pade(c, n, n);
        benchmark::DoNotOptimize(pa.denominator.coefficients.data());
    }
}
BENCHMARK(BM_SinglePade)->Arg(5)->Arg(11)->Arg(22);

void BM_ShootingSolve(benchmark::State& state) {
    ShootingConfig config;
    config.energy_guess = {0.595, 0.0};
    for (auto _ : state) {
        EigenResult result = solve_ground_energy(0.125, config);
        benchmark::DoNotOptimize(result.energy);
    }
}
BENCHMARK(BM_ShootingSolve);

void BM_MatchingDeterminant(benchmark::State& state) {
    ShootingConfig config;
    for (auto _ : state) {
        auto d = matching_determinant(0.125, {0.595, 0.0}, config);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_MatchingDeterminant);

void BM_BounceQuadrature(benchmark::State& state) {
    const QuadratureConfig config;
    for (auto _ : state) {
        BounceAction action = bounce_action(Rat(1, 10), config);
        benchmark::DoNotOptimize(action.numeric);
    }
}
BENCHMARK(BM_BounceQuadrature);

void BM_DispersionMoment(benchmark::State& state) {
    const QuadratureConfig config;
    const Integrand d = [](const Real& t) { return discontinuity(t, kRealDigits); };
    for (auto _ : state) {
        DispersionMoment m = dispersion_moment(3, d, config);
        benchmark::DoNotOptimize(m.abs_value);
    }
}
BENCHMARK(BM_DispersionMoment);

} // namespace

BENCHMARK_MAIN();
