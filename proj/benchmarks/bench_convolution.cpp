#include <benchmark/benchmark.h>

#include <random>

#include "nlstefan/convolution.hpp"

using namespace nlstefan;

namespace {

Field random_field(int n, unsigned seed) {
    const Grid g(-6.0, 6.0, n);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(0.0, 2.0);
    Field f(g);
    for (int i = 0; i < n; ++i)
        f[i] = std::abs(g.node(i)) < 4.0 ? amp(rng) : 0.0;
    return f;
}

void BM_ConvolveDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Field f = random_field(n, 1);
    const KernelTaps taps = make_taps(make_polynomial_kernel(), f.grid.h());
    for (auto _ : state) {
        Field out = convolve(f, taps, ConvMethod::direct);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetComplexityN(n);
}

void BM_ConvolveFFT(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Field f = random_field(n, 1);
    const KernelTaps taps = make_taps(make_polynomial_kernel(), f.grid.h());
    for (auto _ : state) {
        Field out = convolve(f, taps, ConvMethod::fft);
        benchmark::DoNotOptimize(out.values.data());
    }
    state.SetComplexityN(n);
}

} // namespace

BENCHMARK(BM_ConvolveDirect)->RangeMultiplier(2)->Range(256, 8192)->Complexity();
BENCHMARK(BM_ConvolveFFT)->RangeMultiplier(2)->Range(256, 8192)->Complexity();
