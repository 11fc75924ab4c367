#include "nlstefan/stefan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"

namespace nlstefan {

namespace {

constexpr double kTimeTol = 1e-9;

Field temperature_gamma(const Field& u, int n) {
    Field v(u.grid);
    for (int i = 0; i < u.size(); ++i) v[i] = gamma_n(u[i], n);
    return v;
}

// eps^-2 (J*g - g) for a precomputed tap vector.
Field apply_operator(const Field& g, const KernelTaps& taps, double inv_eps2, ConvMethod method) {
    Field out = convolve(g, taps, method);
    for (int i = 0; i < g.size(); ++i) out[i] = (out[i] - g[i]) * inv_eps2;
    return out;
}

struct Stepper {
    const KernelTaps& taps;
    double inv_eps2;
    ConvMethod method;
    int gamma_index; // <= 0 means the exact nonlinearity (u-1)_+

    Field slope(const Field& u) const {
        return apply_operator(gamma_index > 0 ? temperature_gamma(u, gamma_index)
                                              : temperature(u),
                              taps, inv_eps2, method);
    }

    void rk4_step(Field& u, double dt) const {
        const int n = u.size();
        const Field k1 = slope(u);
        Field stage(u.grid);
        for (int i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * dt * k1[i];
        const Field k2 = slope(stage);
        for (int i = 0; i < n; ++i) stage[i] = u[i] + 0.5 * dt * k2[i];
        const Field k3 = slope(stage);
        for (int i = 0; i < n; ++i) stage[i] = u[i] + dt * k3[i];
        const Field k4 = slope(stage);
        for (int i = 0; i < n; ++i)
            u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
};

void validate_domain(const Field& f, const Kernel& kernel, Trajectory& traj) {
    if (kernel.support_radius() > f.grid.length())
        throw NumericError("evolve: kernel support exceeds the domain");
    if (!kernel.nonincreasing()) {
        traj.domain_bound_proven = false;
        return;
    }
    const SupportBounds b = support_bounds(f, kernel);
    if (b.r_f == 0.0) return;
    // Hard requirement: room for one kernel radius of growth. The full
    // localization interval may exceed the grid for tall data even when the
    // run never comes close to it; that case is recorded, not rejected.
    const double h = f.grid.h();
    if (b.center - b.r_f - kernel.support_radius() < f.grid.xmin - h ||
        b.center + b.r_f + kernel.support_radius() > f.grid.xmax + h)
        throw NumericError("evolve: domain too narrow for the datum plus one kernel radius");
    traj.domain_bound_proven = b.center - b.r_u >= f.grid.xmin - h &&
                               b.center + b.r_u <= f.grid.xmax + h;
}

// Aborts before zero-extension starts discarding mass: the temperature may
// not come within one kernel radius of the boundary, and the enthalpy may
// not reach the outermost nodes.
void check_boundary_clearance(const Field& u, int taps_half_width, double delta) {
    const int n = u.size();
    const int guard = std::min(n / 2, taps_half_width + 1);
    for (int i = 0; i < guard; ++i) {
        if (u[i] > 1.0 + delta || u[n - 1 - i] > 1.0 + delta)
            throw NumericError("evolve: temperature support reached the domain boundary; "
                               "enlarge the grid");
    }
    if (std::abs(u[0]) > delta || std::abs(u[n - 1]) > delta)
        throw NumericError("evolve: enthalpy support reached the domain boundary; "
                           "enlarge the grid");
}

StepDiag make_diag(double t, const Field& u) {
    StepDiag d;
    d.t = t;
    d.mass = integrate(u);
    d.sup_u = u.max();
    d.l1_v = l1_norm(temperature(u));
    return d;
}

} // namespace

Field temperature(const Field& u) {
    Field v(u.grid);
    for (int i = 0; i < u.size(); ++i) v[i] = u[i] > 1.0 ? u[i] - 1.0 : 0.0;
    return v;
}

Field rhs(const Field& u, const Kernel& kernel, ConvMethod method) {
    const double inv_eps2 = 1.0 / (kernel.epsilon() * kernel.epsilon());
    return apply_operator(temperature(u), make_taps(kernel, u.grid.h()), inv_eps2, method);
}

double gamma_n(double s, int n) {
    if (n < 1) throw std::invalid_argument("gamma_n: n must be >= 1");
    const double knee = (n + 1.0) / n;
    return s > knee ? s - 1.0 : s / (n + 1.0);
}

const Field& Trajectory::at(double t) const {
    for (int i = 0; i < size(); ++i)
        if (std::abs(times[static_cast<size_t>(i)] - t) <= kTimeTol * std::max(1.0, std::abs(t)))
            return snapshots[static_cast<size_t>(i)];
    std::ostringstream msg;
    msg << "Trajectory: no snapshot at t = " << t;
    throw std::invalid_argument(msg.str());
}

Trajectory evolve(const Field& f, const Kernel& kernel, const SolverConfig& config) {
    if (!f.all_finite()) throw std::invalid_argument("evolve: datum has non-finite values");
    const double eps = kernel.epsilon();
    const double eps2 = eps * eps;
    if (config.dt < 0.0) throw std::invalid_argument("evolve: dt must be positive");
    const double dt = config.dt > 0.0 ? config.dt : 0.1 * eps2;
    if (!(config.t_end > 0.0)) throw std::invalid_argument("evolve: t_end must be positive");
    if (config.scheme != Scheme::picard && dt > 0.5 * eps2)
        throw std::invalid_argument("evolve: explicit stability requires dt <= 0.5*eps^2");

    std::vector<double> events = config.snapshot_times;
    std::sort(events.begin(), events.end());
    for (size_t i = 0; i < events.size(); ++i) {
        if (events[i] <= 0.0 || events[i] > config.t_end + kTimeTol)
            throw std::invalid_argument("evolve: snapshot times must lie in (0, t_end]");
        if (i > 0 && events[i] <= events[i - 1])
            throw std::invalid_argument("evolve: snapshot times must be strictly increasing");
    }
    if (events.empty() || std::abs(events.back() - config.t_end) > kTimeTol)
        events.push_back(config.t_end);

    Trajectory traj;
    validate_domain(f, kernel, traj);

    const KernelTaps taps = make_taps(kernel, f.grid.h());
    const Stepper stepper{taps, 1.0 / eps2, config.conv,
                          config.scheme == Scheme::regularized ? config.gamma_index : 0};

    const double sup_f = f.max();
    const double boundary_delta = 1e-8 * std::max(1.0, f.max_abs());

    Field u = f;
    double t = 0.0;
    traj.times.push_back(0.0);
    traj.snapshots.push_back(f);
    traj.diagnostics.push_back(make_diag(0.0, f));

    size_t next_event = 0;
    while (next_event < events.size()) {
        const double target = events[next_event];
        while (t < target - kTimeTol) {
            double step;
            if (config.scheme == Scheme::picard) {
                step = std::min(0.45 * eps2, target - t);
                const int substeps = std::max(4, static_cast<int>(std::ceil(step / dt)));
                PicardResult r = picard_window(u, kernel, step, config.picard_tol,
                                               config.picard_max_iter, substeps);
                u = std::move(r.u);
            } else {
                step = std::min(dt, target - t);
                stepper.rk4_step(u, step);
            }
            t += step;
            if (!u.all_finite())
                throw NumericError("evolve: non-finite state; instability detected");
            if (u.max() > sup_f + 1e-6)
                throw NumericError("evolve: sup-norm bound violated; instability detected");
            check_boundary_clearance(u, taps.half_width(), boundary_delta);
            traj.diagnostics.push_back(make_diag(t, u));
        }
        t = target;
        traj.times.push_back(target);
        traj.snapshots.push_back(u);
        ++next_event;
    }
    return traj;
}

PicardResult picard_window(const Field& u0, const Kernel& kernel, double window, double tol,
                           int max_iter, int substeps) {
    const double eps2 = kernel.epsilon() * kernel.epsilon();
    if (!(window > 0.0)) throw std::invalid_argument("picard_window: window must be positive");
    if (window >= 0.5 * eps2)
        throw std::invalid_argument(
            "picard_window: window must be below eps^2/2 for the operator to contract");
    if (!(tol > 0.0)) throw std::invalid_argument("picard_window: tol must be positive");
    if (substeps <= 0)
        substeps = std::max(16, static_cast<int>(std::ceil(window / (1e-3 * eps2))));

    const KernelTaps taps = make_taps(kernel, u0.grid.h());
    const double dtau = window / substeps;
    const double inv_eps2 = 1.0 / eps2;
    const int n = u0.size();

    std::vector<Field> iterate(static_cast<size_t>(substeps) + 1, u0);
    std::vector<Field> slopes(static_cast<size_t>(substeps) + 1, Field(u0.grid));

    PicardResult result;
    for (int sweep = 0; sweep < max_iter; ++sweep) {
        for (int k = 0; k <= substeps; ++k)
            slopes[static_cast<size_t>(k)] = apply_operator(
                temperature(iterate[static_cast<size_t>(k)]), taps, inv_eps2,
                ConvMethod::auto_select);
        double residual = 0.0;
        Field cum(u0.grid); // running trapezoidal integral of the slope
        Field next = u0;
        for (int k = 1; k <= substeps; ++k) {
            const Field& lo = slopes[static_cast<size_t>(k - 1)];
            const Field& hi = slopes[static_cast<size_t>(k)];
            for (int i = 0; i < n; ++i) {
                cum[i] += 0.5 * dtau * (lo[i] + hi[i]);
                next[i] = u0[i] + cum[i];
            }
            residual = std::max(residual, l1_distance(next, iterate[static_cast<size_t>(k)]));
            iterate[static_cast<size_t>(k)] = next;
        }
        result.residuals.push_back(residual);
        result.iterations = sweep + 1;
        if (residual <= tol) {
            result.u = iterate.back();
            return result;
        }
    }
    std::ostringstream msg;
    msg << "picard_window: no convergence in " << max_iter
        << " sweeps; last residual " << result.residuals.back();
    throw NumericError(msg.str());
}

} // namespace nlstefan
