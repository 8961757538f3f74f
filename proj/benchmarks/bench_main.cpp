#include <benchmark/benchmark.h>

#include <vector>

#include "envbounds/anharmonic.hpp"
#include "envbounds/envelope.hpp"
#include "envbounds/radial_solver.hpp"

using namespace envbounds;

static void BM_QuarticGroundState(benchmark::State& state) {
    const PotentialSpec pot(1, {{1, 2}, {static_cast<double>(state.range(0)), 4}});
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(pot, {1, 0, 1}));
}
BENCHMARK(BM_QuarticGroundState)->Arg(1)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_ExcitedState3D(benchmark::State& state) {
    const PotentialSpec pot(3, {{1, 2}, {1, 6}});
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eigenvalue(pot, {n, 2, 3}));
}
BENCHMARK(BM_ExcitedState3D)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Minimize(benchmark::State& state) {
    const std::vector<EnvelopeTerm> terms{{1, 2, 0.5}, {0.3, 4, 0.648}, {2, 8, 0.83}};
    for (auto _ : state) benchmark::DoNotOptimize(minimize(terms));
}
BENCHMARK(BM_Minimize);

static void BM_EnergyOfLambda(benchmark::State& state) {
    const AnharmonicModel model(3, 0.25, 0.1811531980432237);
    double lam = 0.001;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.energy_of_lambda(lam));
        lam = lam < 1000 ? lam * 1.7 : 0.001;
    }
}
BENCHMARK(BM_EnergyOfLambda);

BENCHMARK_MAIN();
