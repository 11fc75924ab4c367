#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace nlstefan {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double correlation = 0.0;
};

/// Least-squares line y = intercept + slope*x with the Pearson correlation.
inline LinearFit fit_linear(const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    if (n != ys.size() || n < 2) throw std::invalid_argument("fit_linear: need >= 2 points");
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, syy = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mx, dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.correlation = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
    return fit;
}

} // namespace nlstefan
