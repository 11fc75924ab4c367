#include "nlstefan/convolution.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace nlstefan {

namespace {

// FFTW's planner is not thread-safe; executing distinct plans is. Plans are
// cached per padded length and executed on caller-owned fftw_malloc buffers
// through the new-array interface, which keeps concurrent convolutions safe.
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

int next_pow2(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

struct RealBuf {
    double* p = nullptr;
    explicit RealBuf(size_t n) : p(fftw_alloc_real(n)) {}
    ~RealBuf() { fftw_free(p); }
    RealBuf(const RealBuf&) = delete;
    RealBuf& operator=(const RealBuf&) = delete;
};
struct ComplexBuf {
    fftw_complex* p = nullptr;
    explicit ComplexBuf(size_t n) : p(fftw_alloc_complex(n)) {}
    ~ComplexBuf() { fftw_free(p); }
    ComplexBuf(const ComplexBuf&) = delete;
    ComplexBuf& operator=(const ComplexBuf&) = delete;
};

Field convolve_direct(const Field& g, const KernelTaps& taps) {
    const int n = g.size();
    const int m = taps.half_width();
    const double h = g.grid.h();
    Field out(g.grid);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        const int lo = std::max(-m, i - (n - 1));
        const int hi = std::min(m, i);
        for (int k = lo; k <= hi; ++k) {
            const int j = i - k;
            double gj = g[j];
            if (j == 0 || j == n - 1) gj *= 0.5;
            acc += taps.taps[static_cast<size_t>(std::abs(k))] * gj;
        }
        out[i] = acc * h;
    }
    return out;
}

Field convolve_fft(const Field& g, const KernelTaps& taps) {
    const int n = g.size();
    const int m = taps.half_width();
    const double h = g.grid.h();
    // L >= 2n >= n + m + 1 keeps the circular wrap-around out of the first
    // n output slots (the kernel never spans more than the domain).
    const int len = next_pow2(2 * n);
    auto plans = plans_for(len);

    RealBuf a(static_cast<size_t>(len)), b(static_cast<size_t>(len)), c(static_cast<size_t>(len));
    ComplexBuf fa(static_cast<size_t>(len / 2 + 1)), fb(static_cast<size_t>(len / 2 + 1));

    std::memset(a.p, 0, sizeof(double) * static_cast<size_t>(len));
    std::memset(b.p, 0, sizeof(double) * static_cast<size_t>(len));
    for (int j = 0; j < n; ++j) {
        double gj = g[j];
        if (j == 0 || j == n - 1) gj *= 0.5;
        a.p[j] = gj * h;
    }
    b.p[0] = taps.taps[0];
    for (int k = 1; k <= m; ++k) {
        b.p[k] = taps.taps[static_cast<size_t>(k)];
        b.p[len - k] = taps.taps[static_cast<size_t>(k)];
    }

    fftw_execute_dft_r2c(plans->fwd, a.p, fa.p);
    fftw_execute_dft_r2c(plans->fwd, b.p, fb.p);
    for (int k = 0; k <= len / 2; ++k) {
        const std::complex<double> pa(fa.p[k][0], fa.p[k][1]);
        const std::complex<double> pb(fb.p[k][0], fb.p[k][1]);
        const std::complex<double> prod = pa * pb;
        fa.p[k][0] = prod.real();
        fa.p[k][1] = prod.imag();
    }
    fftw_execute_dft_c2r(plans->inv, fa.p, c.p);

    Field out(g.grid);
    const double scale = 1.0 / len;
    for (int i = 0; i < n; ++i) out[i] = c.p[i] * scale;
    return out;
}

} // namespace

KernelTaps make_taps(const Kernel& kernel, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("make_taps: spacing must be positive");
    const double r = kernel.support_radius();
    const int m = static_cast<int>(std::floor(r / h + 1e-12));
    KernelTaps t;
    t.h = h;
    t.taps.resize(static_cast<size_t>(m) + 1);
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double v = kernel.evaluate(k * h);
        t.taps[static_cast<size_t>(k)] = v;
        sum += (k == 0) ? v : 2.0 * v;
    }
    t.raw_mass = sum * h;
    // One global factor makes the discrete mass exact; per-row normalization
    // would break the symmetry the comparison arguments rely on.
    const double scale = 1.0 / t.raw_mass;
    for (double& v : t.taps) v *= scale;
    return t;
}

Field convolve(const Field& g, const Kernel& kernel, ConvMethod method) {
    if (kernel.support_radius() > g.grid.length())
        throw std::invalid_argument("convolve: kernel support exceeds the domain");
    if (!g.all_finite()) throw std::invalid_argument("convolve: field has non-finite values");
    return convolve(g, make_taps(kernel, g.grid.h()), method);
}

Field convolve(const Field& g, const KernelTaps& taps, ConvMethod method) {
    if (taps.h != g.grid.h())
        throw std::invalid_argument("convolve: taps were built for a different spacing");
    if (taps.half_width() > g.size() - 1)
        throw std::invalid_argument("convolve: kernel support exceeds the domain");
    switch (method) {
    case ConvMethod::direct:
        return convolve_direct(g, taps);
    case ConvMethod::fft:
        return convolve_fft(g, taps);
    case ConvMethod::auto_select:
    default:
        return taps.half_width() <= 24 ? convolve_direct(g, taps) : convolve_fft(g, taps);
    }
}

} // namespace nlstefan
