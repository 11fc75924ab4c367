#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace nlstefan {

/// Uniform 1D grid with nodes x_i = xmin + i*h, i = 0..n-1,
/// h = (xmax - xmin)/(n - 1).
struct Grid {
    double xmin = 0.0;
    double xmax = 1.0;
    int n = 0;

    Grid() = default;
    Grid(double xmin_, double xmax_, int n_) : xmin(xmin_), xmax(xmax_), n(n_) {
        if (n < 3) throw std::invalid_argument("Grid: need at least 3 nodes");
        if (!(xmax > xmin)) throw std::invalid_argument("Grid: xmax must exceed xmin");
    }

    double h() const { return (xmax - xmin) / (n - 1); }
    // The last node is xmax exactly, so written grids read back identically.
    double node(int i) const { return i == n - 1 ? xmax : xmin + i * h(); }
    double length() const { return xmax - xmin; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.xmin == b.xmin && a.xmax == b.xmax && a.n == b.n;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }
};

/// A real-valued function sampled on a Grid (enthalpy u, temperature v,
/// Baiocchi variable w, or initial datum f).
struct Field {
    Grid grid;
    std::vector<double> values;

    Field() = default;
    Field(const Grid& g, double fill = 0.0) : grid(g), values(static_cast<size_t>(g.n), fill) {}
    Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != g.n)
            throw std::invalid_argument("Field: value count does not match grid");
    }

    template <typename Fn>
    static Field sample(const Grid& g, Fn&& fn) {
        Field f(g);
        for (int i = 0; i < g.n; ++i) f.values[static_cast<size_t>(i)] = fn(g.node(i));
        return f;
    }

    int size() const { return grid.n; }
    double& operator[](int i) { return values[static_cast<size_t>(i)]; }
    double operator[](int i) const { return values[static_cast<size_t>(i)]; }

    double max() const {
        double m = -HUGE_VAL;
        for (double v : values) m = std::max(m, v);
        return m;
    }
    double min() const {
        double m = HUGE_VAL;
        for (double v : values) m = std::min(m, v);
        return m;
    }
    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Trapezoidal quadrature over [xmin, xmax].
inline double integrate(const Field& f) {
    const int n = f.size();
    double acc = 0.5 * (f[0] + f[n - 1]);
    for (int i = 1; i < n - 1; ++i) acc += f[i];
    return acc * f.grid.h();
}

/// Trapezoidal integral of |a - b|; the L1 metric used throughout.
inline double l1_distance(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw std::invalid_argument("l1_distance: grid mismatch");
    const int n = a.size();
    double acc = 0.5 * (std::abs(a[0] - b[0]) + std::abs(a[n - 1] - b[n - 1]));
    for (int i = 1; i < n - 1; ++i) acc += std::abs(a[i] - b[i]);
    return acc * a.grid.h();
}

/// Trapezoidal integral of |f|.
inline double l1_norm(const Field& f) {
    const int n = f.size();
    double acc = 0.5 * (std::abs(f[0]) + std::abs(f[n - 1]));
    for (int i = 1; i < n - 1; ++i) acc += std::abs(f[i]);
    return acc * f.grid.h();
}

/// Trapezoidal integral of the positive part (a - b)_+.
inline double integrate_positive_part(const Field& a, const Field& b) {
    if (a.grid != b.grid) throw std::invalid_argument("integrate_positive_part: grid mismatch");
    const int n = a.size();
    auto pos = [](double x) { return x > 0.0 ? x : 0.0; };
    double acc = 0.5 * (pos(a[0] - b[0]) + pos(a[n - 1] - b[n - 1]));
    for (int i = 1; i < n - 1; ++i) acc += pos(a[i] - b[i]);
    return acc * a.grid.h();
}

} // namespace nlstefan
