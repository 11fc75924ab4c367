#include <benchmark/benchmark.h>

#include <cmath>

#include "nlstefan/local_limit.hpp"
#include "nlstefan/nonlocal_heat.hpp"
#include "nlstefan/obstacle.hpp"
#include "nlstefan/stefan.hpp"

using namespace nlstefan;

namespace {

Field mushy_datum(int n) {
    const Grid g(-6.0, 6.0, n);
    return Field::sample(g, [](double x) { return std::abs(x) <= 1.0 ? 2.0 : 0.0; });
}

void BM_EvolveUnitTime(benchmark::State& state) {
    const Field f = mushy_datum(static_cast<int>(state.range(0)));
    const Kernel k = make_polynomial_kernel();
    SolverConfig cfg;
    cfg.dt = 0.01;
    cfg.t_end = 1.0;
    cfg.snapshot_times = {1.0};
    for (auto _ : state) {
        Trajectory traj = evolve(f, k, cfg);
        benchmark::DoNotOptimize(traj.snapshots.back().values.data());
    }
}

void BM_ObstacleSolve(benchmark::State& state) {
    const Field f = mushy_datum(static_cast<int>(state.range(0)));
    const Kernel k = make_polynomial_kernel();
    for (auto _ : state) {
        ObstacleSolution sol = obstacle_solve(f, k, 1e-8);
        benchmark::DoNotOptimize(sol.w.values.data());
    }
}

void BM_LocalStefanUnitTime(benchmark::State& state) {
    const Field f = mushy_datum(static_cast<int>(state.range(0)));
    const double m2 = 0.2;
    const double h = f.grid.h();
    const double dt = 0.9 * h * h / (2.0 * m2);
    for (auto _ : state) {
        Trajectory traj = local_stefan_solve(f, m2, dt, 1.0, {1.0});
        benchmark::DoNotOptimize(traj.snapshots.back().values.data());
    }
}

void BM_HeatNonlocalSpectral(benchmark::State& state) {
    const Grid g(-50.0, 50.0, static_cast<int>(state.range(0)));
    const Field f = Field::sample(g, [](double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; });
    const Kernel k = make_polynomial_kernel();
    for (auto _ : state) {
        Field u = heat_nonlocal(f, k, 10.0);
        benchmark::DoNotOptimize(u.values.data());
    }
}

} // namespace

BENCHMARK(BM_EvolveUnitTime)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ObstacleSolve)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalStefanUnitTime)->Arg(1025)->Arg(2049)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeatNonlocalSpectral)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);
