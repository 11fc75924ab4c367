#include "nlstefan/local_limit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"

namespace nlstefan {

namespace {

constexpr double kTimeTol = 1e-9;

StepDiag diag_of(double t, const Field& u) {
    StepDiag d;
    d.t = t;
    d.mass = integrate(u);
    d.sup_u = u.max();
    d.l1_v = l1_norm(temperature(u));
    return d;
}

Field refine4(const Field& f) {
    const Grid fine(f.grid.xmin, f.grid.xmax, 4 * (f.grid.n - 1) + 1);
    Field out(fine);
    for (int i = 0; i < fine.n; ++i) {
        const int j = i / 4;
        const int r = i % 4;
        if (r == 0) {
            out[i] = f[j];
        } else {
            const double t = r / 4.0;
            out[i] = (1.0 - t) * f[j] + t * f[j + 1];
        }
    }
    return out;
}

Field restrict4(const Field& fine, const Grid& coarse) {
    Field out(coarse);
    for (int i = 0; i < coarse.n; ++i) out[i] = fine[4 * i];
    return out;
}

} // namespace

Trajectory local_stefan_solve(const Field& f, double m2, double dt, double t_end,
                              const std::vector<double>& snapshot_times) {
    if (!(m2 > 0.0)) throw std::invalid_argument("local_stefan_solve: m2 must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("local_stefan_solve: dt must be positive");
    const double h = f.grid.h();
    if (dt > h * h / (2.0 * m2))
        throw NumericError("local_stefan_solve: CFL violation, need dt <= h^2/(2*m2)");

    std::vector<double> events = snapshot_times;
    std::sort(events.begin(), events.end());
    if (events.empty() || std::abs(events.back() - t_end) > kTimeTol) events.push_back(t_end);

    const long total_steps = static_cast<long>(std::ceil(t_end / dt));
    const long diag_stride = std::max(1L, total_steps / 4096);

    Trajectory traj;
    traj.times.push_back(0.0);
    traj.snapshots.push_back(f);
    traj.diagnostics.push_back(diag_of(0.0, f));

    const int n = f.size();
    const double c = 0.5 * m2 / (h * h);
    Field u = f;
    Field v(f.grid);
    double t = 0.0;
    long step_count = 0;

    size_t next_event = 0;
    while (next_event < events.size()) {
        const double target = events[next_event];
        while (t < target - kTimeTol) {
            const double step = std::min(dt, target - t);
            for (int i = 0; i < n; ++i) v[i] = u[i] > 1.0 ? u[i] - 1.0 : 0.0;
            for (int i = 0; i < n; ++i) {
                const double vl = i > 0 ? v[i - 1] : 0.0;
                const double vr = i < n - 1 ? v[i + 1] : 0.0;
                u[i] += step * c * (vl - 2.0 * v[i] + vr);
            }
            t += step;
            ++step_count;
            if (step_count % diag_stride == 0 || t >= target - kTimeTol) {
                if (!u.all_finite())
                    throw NumericError("local_stefan_solve: non-finite state");
                traj.diagnostics.push_back(diag_of(t, u));
            }
        }
        t = target;
        traj.times.push_back(target);
        traj.snapshots.push_back(u);
        ++next_event;
    }
    return traj;
}

EpsStudy eps_convergence_study(const Field& f, const Kernel& kernel,
                               const std::vector<double>& eps_list, double t_eval) {
    if (eps_list.empty())
        throw std::invalid_argument("eps_convergence_study: empty eps list");
    for (size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0 && eps_list[i] <= 1.0))
            throw std::invalid_argument("eps_convergence_study: eps must lie in (0, 1]");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("eps_convergence_study: eps list must decrease");
    }
    if (!(t_eval > 0.0)) throw std::invalid_argument("eps_convergence_study: t_eval <= 0");

    EpsStudy study;
    study.t_eval = t_eval;

    // Local reference on the 4x grid, restricted back to the study grid.
    const double m2 = second_moment(kernel);
    const Field f_fine = refine4(f);
    const double h_fine = f_fine.grid.h();
    const double dt_fine = 0.9 * h_fine * h_fine / (2.0 * m2);
    const Trajectory local = local_stefan_solve(f_fine, m2, dt_fine, t_eval, {t_eval});
    study.local_solution = restrict4(local.at(t_eval), f.grid);

    for (double eps : eps_list) {
        const Kernel k_eps = kernel.rescale(eps);
        SolverConfig cfg;
        cfg.dt = 0.1 * eps * eps;
        cfg.t_end = t_eval;
        cfg.snapshot_times = {t_eval};
        const Trajectory traj = evolve(f, k_eps, cfg);
        const Field& u_eps = traj.at(t_eval);
        EpsStudyRow row;
        row.eps = eps;
        row.l1_error = l1_distance(u_eps, study.local_solution);
        row.mushy_measure = mushy_region(u_eps, 1e-6).total_measure();
        study.rows.push_back(row);
        study.nonlocal_solutions.push_back(u_eps);
    }
    return study;
}

} // namespace nlstefan
