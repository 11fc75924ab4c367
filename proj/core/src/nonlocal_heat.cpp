#include "nlstefan/nonlocal_heat.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"

namespace nlstefan {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
    ~PlanPair() {
        if (fwd) fftw_destroy_plan(fwd);
        if (inv) fftw_destroy_plan(inv);
    }
};

std::mutex planner_mutex;
std::map<int, std::shared_ptr<PlanPair>> plan_cache;

std::shared_ptr<PlanPair> plans_for(int len) {
    std::lock_guard<std::mutex> lock(planner_mutex);
    auto it = plan_cache.find(len);
    if (it != plan_cache.end()) return it->second;
    auto pair = std::make_shared<PlanPair>();
    double* re = fftw_alloc_real(static_cast<size_t>(len));
    fftw_complex* cx = fftw_alloc_complex(static_cast<size_t>(len / 2 + 1));
    pair->fwd = fftw_plan_dft_r2c_1d(len, re, cx, FFTW_ESTIMATE);
    pair->inv = fftw_plan_dft_c2r_1d(len, cx, re, FFTW_ESTIMATE);
    fftw_free(re);
    fftw_free(cx);
    plan_cache.emplace(len, pair);
    return pair;
}

// Simpson quadrature of Q(s) = 2 int_0^R prof(r) cos(s r) dr. Positive
// weights keep |Q(s)| <= Q(0) for any s.
double cosine_quadrature(const Kernel& kernel, double s) {
    const auto& prof = kernel.profile();
    const double r_max = kernel.radius();
    const int panels = 4096;
    const double dr = r_max / panels;
    double acc = prof(0.0) + prof(r_max) * std::cos(s * r_max);
    for (int i = 1; i < panels; ++i) {
        const double r = i * dr;
        acc += (i % 2 == 1 ? 4.0 : 2.0) * prof(r) * std::cos(s * r);
    }
    return 2.0 * acc * dr / 3.0;
}

// J_hat at the nonnegative frequencies of the periodic cell, normalized to
// J_hat(0) = 1 exactly.
std::vector<double> symbol_samples(const Kernel& kernel, int n, double period) {
    const double q0 = cosine_quadrature(kernel, 0.0);
    std::vector<double> sym(static_cast<size_t>(n / 2) + 1);
    for (int k = 0; k <= n / 2; ++k) {
        const double xi = 2.0 * std::numbers::pi * k / period;
        sym[static_cast<size_t>(k)] = cosine_quadrature(kernel, kernel.epsilon() * xi) / q0;
    }
    return sym;
}

template <typename Multiplier>
Field apply_multiplier(const Field& f, Multiplier&& mult) {
    const int n = f.size();
    auto plans = plans_for(n);

    double* re = fftw_alloc_real(static_cast<size_t>(n));
    fftw_complex* cx = fftw_alloc_complex(static_cast<size_t>(n / 2 + 1));
    std::memcpy(re, f.values.data(), sizeof(double) * static_cast<size_t>(n));
    fftw_execute_dft_r2c(plans->fwd, re, cx);
    for (int k = 0; k <= n / 2; ++k) {
        const double m = mult(k);
        cx[k][0] *= m;
        cx[k][1] *= m;
    }
    fftw_execute_dft_c2r(plans->inv, cx, re);

    Field out(f.grid);
    const double scale = 1.0 / n;
    for (int i = 0; i < n; ++i) out[i] = re[i] * scale;
    fftw_free(re);
    fftw_free(cx);
    return out;
}

void check_domain(const Field& f, double m2_scaled, double eps_radius, double t) {
    const double sup = f.max_abs();
    if (sup == 0.0) return;
    const SupportSet s = support(f, 1e-8 * sup);
    if (s.empty()) return;
    const double center = 0.5 * (f.grid.xmin + f.grid.xmax);
    const double reach = std::max(std::abs(s.min() - center), std::abs(s.max() - center));
    const double period = f.grid.n * f.grid.h();
    const double needed = reach + 6.0 * std::sqrt(m2_scaled * std::max(t, 0.0)) + eps_radius;
    if (0.5 * period < needed) {
        std::ostringstream msg;
        msg << "heat solver: domain half-width " << 0.5 * period
            << " below the diffusion reach " << needed << " at t = " << t
            << "; enlarge the grid";
        throw NumericError(msg.str());
    }
}

double scaled_m2(const Kernel& kernel) {
    return second_moment(kernel) * kernel.epsilon() * kernel.epsilon();
}

} // namespace

double kernel_symbol(const Kernel& kernel, double xi) {
    return cosine_quadrature(kernel, kernel.epsilon() * xi) /
           cosine_quadrature(kernel, 0.0);
}

Field heat_nonlocal(const Field& f, const Kernel& kernel, double t) {
    if (t < 0.0) throw std::invalid_argument("heat_nonlocal: t must be nonnegative");
    check_domain(f, scaled_m2(kernel), kernel.support_radius(), t);
    const auto sym = symbol_samples(kernel, f.size(), f.size() * f.grid.h());
    return apply_multiplier(
        f, [&](int k) { return std::exp((sym[static_cast<size_t>(k)] - 1.0) * t); });
}

Field regular_part(const Field& f, const Kernel& kernel, double t) {
    if (t < 0.0) throw std::invalid_argument("regular_part: t must be nonnegative");
    check_domain(f, scaled_m2(kernel), kernel.support_radius(), t);
    const auto sym = symbol_samples(kernel, f.size(), f.size() * f.grid.h());
    const double decay = std::exp(-t);
    return apply_multiplier(f, [&](int k) {
        return std::exp((sym[static_cast<size_t>(k)] - 1.0) * t) - decay;
    });
}

Field heat_local_spectral(const Field& f, double m2, double t) {
    if (!(m2 > 0.0)) throw std::invalid_argument("heat_local_spectral: m2 must be positive");
    if (t < 0.0) throw std::invalid_argument("heat_local_spectral: t must be nonnegative");
    check_domain(f, m2, 0.0, t);
    const double c = 0.5 * m2;
    const double period = f.size() * f.grid.h();
    return apply_multiplier(f, [&](int k) {
        const double xi = 2.0 * std::numbers::pi * k / period;
        return std::exp(-c * xi * xi * t);
    });
}

std::vector<std::pair<double, double>> decay_check(const Field& f, const Kernel& kernel,
                                                   const std::vector<double>& t_list) {
    for (size_t i = 0; i < t_list.size(); ++i) {
        if (!(t_list[i] > 0.0))
            throw std::invalid_argument("decay_check: times must be positive");
        if (i > 0 && !(t_list[i] > t_list[i - 1]))
            throw std::invalid_argument("decay_check: times must increase");
    }
    const double m2 = second_moment(kernel);
    const double m2s = scaled_m2(kernel);
    const double period = f.size() * f.grid.h();
    const auto sym = symbol_samples(kernel, f.size(), period);
    const double c = 0.5 * m2s;

    std::vector<std::pair<double, double>> out;
    out.reserve(t_list.size());
    for (double t : t_list) {
        check_domain(f, std::max(m2s, m2), kernel.support_radius(), t);
        const Field u = apply_multiplier(
            f, [&](int k) { return std::exp((sym[static_cast<size_t>(k)] - 1.0) * t); });
        const Field h = apply_multiplier(f, [&](int k) {
            const double xi = 2.0 * std::numbers::pi * k / period;
            return std::exp(-c * xi * xi * t);
        });
        const double decay = std::exp(-t);
        double sup = 0.0;
        for (int i = 0; i < f.size(); ++i)
            sup = std::max(sup, std::abs(u[i] - decay * f[i] - h[i]));
        out.emplace_back(t, std::sqrt(t) * sup);
    }
    return out;
}

} // namespace nlstefan
