#pragma once

#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"

namespace nlstefan {

enum class ConvMethod {
    auto_select, ///< direct for narrow kernels, fft otherwise
    direct,      ///< O(n*k) summation in fixed order
    fft          ///< zero-padded FFT, O(n log n)
};

/// Discrete kernel taps on a grid of spacing h: tap[m] ~ J_eps(m*h) for
/// m = 0..M, scaled by a single global factor so that the discrete mass
/// h*(tap[0] + 2*sum tap[m]) is exactly 1. The raw trapezoidal mass defect
/// is kept for diagnostics.
struct KernelTaps {
    std::vector<double> taps; ///< offsets 0..M
    double h = 0.0;
    double raw_mass = 0.0; ///< h * sum of unnormalized taps

    int half_width() const { return static_cast<int>(taps.size()) - 1; }
};

KernelTaps make_taps(const Kernel& kernel, double h);

/// (J*g)(x_i) = sum_j w_j J(x_i - x_j) g(x_j) h with trapezoidal weights
/// w_j; g is extended by zero outside [xmin, xmax]. The direct and fft
/// paths agree to ~1e-15 relative; both are deterministic.
///
/// Throws std::invalid_argument when the kernel support exceeds the domain.
Field convolve(const Field& g, const Kernel& kernel,
               ConvMethod method = ConvMethod::auto_select);

/// Same, reusing a precomputed tap vector (must match g.grid.h()).
Field convolve(const Field& g, const KernelTaps& taps,
               ConvMethod method = ConvMethod::auto_select);

} // namespace nlstefan
