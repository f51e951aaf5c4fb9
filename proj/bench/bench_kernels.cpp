// Serial reference against the OpenMP kernels: the basis scan on one state and
// a full parameter sweep.

#include <benchmark/benchmark.h>

#include "qcorr/basis_scan.hpp"
#include "qcorr/channels.hpp"
#include "qcorr/experiments.hpp"

namespace {

using namespace qcorr;

ComplexMatrix damped_state() {
    const auto rho = to_density(make_pure(StateFamily(FamilyKind::Phi, 0.5)));
    return apply_two_qubit(rho, amplitude_damping(0.4), phase_damping(0.3)).matrix();
}

kernels::ScanGrid grid_for(const benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    return {n, 2 * n};
}

void BM_ScanSerial(benchmark::State& state) {
    const auto rho = damped_state();
    const auto grid = grid_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_serial(rho, Party::A, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_ScanParallel(benchmark::State& state) {
    const auto rho = damped_state();
    const auto grid = grid_for(state);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::scan_parallel(rho, Party::A, grid));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

SweepConfig sweep_config(bool parallel) {
    SweepConfig config;
    config.scenario = Scenario::AmpBoth;
    config.c_in = {0.25, 0.5, 0.75, 1.0};
    config.strength = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    config.parallel = parallel;
    config.discord.parallel_scan = parallel;
    return config;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto config = sweep_config(false);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto config = sweep_config(true);
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(config));
}

}  // namespace

BENCHMARK(BM_ScanSerial)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ScanParallel)->Arg(32)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
