#include <benchmark/benchmark.h>

#include "qerasure/dynamics.hpp"
#include "qerasure/geometry.hpp"
#include "qerasure/protocol.hpp"

using namespace qerasure;

static void BM_FAlphaZero(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(f_alpha(0.0, alpha));
    }
}
BENCHMARK(BM_FAlphaZero)->Arg(0)->Arg(1)->Arg(2);

static void BM_ThermodynamicLength(benchmark::State& state) {
    const ErasureTask task(1.0, 1e-4, 200.0);
    const BathSpectrum spectrum(1.0, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(thermodynamic_length(task, spectrum));
    }
}
BENCHMARK(BM_ThermodynamicLength);

static void BM_OptimalProtocol(benchmark::State& state) {
    const ErasureTask task(1.0, 1e-4, 200.0);
    const BathSpectrum spectrum(static_cast<double>(state.range(0)), 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimal_protocol(task, spectrum));
    }
}
BENCHMARK(BM_OptimalProtocol)->Arg(0)->Arg(1)->Arg(2);

static void BM_Simulate(benchmark::State& state) {
    const double tau = static_cast<double>(state.range(0));
    const ErasureTask task(1.0, 1e-4, tau);
    const BathSpectrum spectrum(1.0, 1.0);
    const Protocol p = optimal_protocol(task, spectrum);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(p, task, spectrum));
    }
}
BENCHMARK(BM_Simulate)->Arg(50)->Arg(200)->Arg(1000);

BENCHMARK_MAIN();
