#pragma once

// Test-only quadrature and data helpers. These stay independent of the
// library's discretization so they can serve as oracles for it.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "nlstefan/grid.hpp"

namespace nlstefan::testing {

inline double simpson(const std::function<double(double)>& fn, double a, double b,
                      int panels = 4096) {
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double acc = fn(a) + fn(b);
    for (int i = 1; i < panels; ++i) acc += (i % 2 ? 4.0 : 2.0) * fn(a + i * h);
    return acc * h / 3.0;
}

inline double fine_trapezoid(const std::function<double(double)>& fn, double a, double b,
                             int panels = 100000) {
    const double h = (b - a) / panels;
    double acc = 0.5 * (fn(a) + fn(b));
    for (int i = 1; i < panels; ++i) acc += fn(a + i * h);
    return acc * h;
}

/// Deterministic bounded compactly supported data: a few random boxes plus
/// an occasional smooth bump, clamped to [0, max_amp], supported inside
/// [-half_support, half_support].
inline Field random_datum(const Grid& grid, std::mt19937& rng, double half_support = 2.5,
                          double max_amp = 2.5) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> npieces(1, 4);
    Field f(grid);
    const int k = npieces(rng);
    for (int p = 0; p < k; ++p) {
        const double c = (2.0 * unit(rng) - 1.0) * (half_support * 0.8);
        const double w = 0.1 + unit(rng) * (half_support * 0.5);
        const double a = unit(rng) * max_amp;
        const bool smooth = unit(rng) < 0.3;
        for (int i = 0; i < grid.n; ++i) {
            const double x = grid.node(i);
            if (std::abs(x - c) > w) continue;
            const double add =
                smooth ? a * std::pow(std::cos(0.5 * M_PI * (x - c) / w), 2) : a;
            f[i] = std::min(max_amp, f[i] + add);
        }
    }
    for (int i = 0; i < grid.n; ++i)
        if (std::abs(grid.node(i)) > half_support) f[i] = 0.0;
    return f;
}

} // namespace nlstefan::testing
