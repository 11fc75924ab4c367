#include "nlstefan/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "nlstefan/convolution.hpp"
#include "nlstefan/errors.hpp"

namespace nlstefan {

Field baiocchi(const Trajectory& trajectory) {
    if (trajectory.size() < 2)
        throw std::invalid_argument("baiocchi: need at least two snapshots");
    Field w(trajectory.snapshots.front().grid);
    Field v_prev = temperature(trajectory.snapshots.front());
    for (int k = 1; k < trajectory.size(); ++k) {
        const Field v = temperature(trajectory.snapshots[static_cast<size_t>(k)]);
        const double dt = trajectory.times[static_cast<size_t>(k)] -
                          trajectory.times[static_cast<size_t>(k - 1)];
        for (int i = 0; i < w.size(); ++i) w[i] += 0.5 * dt * (v_prev[i] + v[i]);
        v_prev = v;
    }
    return w;
}

ObstacleSolution obstacle_solve(const Field& f, const Kernel& kernel, double tol,
                                long max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("obstacle_solve: tol must be positive");
    if (f.min() < -1e-12)
        throw std::invalid_argument("obstacle_solve: datum must be nonnegative");
    if (kernel.support_radius() > f.grid.length())
        throw NumericError("obstacle_solve: kernel support exceeds the domain");

    const KernelTaps taps = make_taps(kernel, f.grid.h());
    const int n = f.size();
    const double mass_f = l1_norm(f);

    Field w(f.grid);
    Field jw(f.grid);
    long sweeps = 0;
    double residual = HUGE_VAL;
    for (long iter = 0; iter < max_iter; ++iter) {
        jw = convolve(w, taps, ConvMethod::direct);
        double diff = 0.0;
        for (int i = 0; i < n; ++i) {
            const double next = std::max(f[i] + jw[i] - 1.0, 0.0);
            const double d = std::abs(next - w[i]);
            diff += (i == 0 || i == n - 1) ? 0.5 * d : d;
            w[i] = next;
        }
        residual = diff * f.grid.h();
        if (residual > 0.0) ++sweeps;
        if (residual <= tol) break;
        // Iterates grow monotonically; unbounded growth signals data outside
        // the class with integrable temperature history.
        if (l1_norm(w) > 1e6 * std::max(1.0, mass_f)) {
            std::ostringstream msg;
            msg << "obstacle_solve: iterates diverging (||w||_1 = " << l1_norm(w)
                << " after " << iter + 1 << " sweeps)";
            throw NumericError(msg.str());
        }
    }
    if (residual > tol) {
        std::ostringstream msg;
        msg << "obstacle_solve: no convergence in " << max_iter
            << " sweeps; last residual " << residual;
        throw NumericError(msg.str());
    }

    ObstacleSolution sol;
    sol.iterations = sweeps;
    jw = convolve(w, taps, ConvMethod::direct);
    Field mesa(f.grid);
    for (int i = 0; i < n; ++i) mesa[i] = f[i] + jw[i] - w[i];

    ObstacleResiduals r;
    double compl_acc = 0.0;
    for (int i = 0; i < n; ++i) {
        r.neg_w = std::max(r.neg_w, -w[i]);
        r.lower = std::max(r.lower, -mesa[i]);
        r.upper = std::max(r.upper, mesa[i] - 1.0);
        const double c = std::abs((mesa[i] - 1.0) * w[i]);
        compl_acc += (i == 0 || i == n - 1) ? 0.5 * c : c;
    }
    r.neg_w = std::max(r.neg_w, 0.0);
    r.lower = std::max(r.lower, 0.0);
    r.upper = std::max(r.upper, 0.0);
    r.compl_ = compl_acc * f.grid.h();

    sol.w = std::move(w);
    sol.mesa = std::move(mesa);
    sol.residuals = r;
    return sol;
}

Field mesa_project(const Field& f, const Kernel& kernel) {
    return obstacle_solve(f, kernel).mesa;
}

LongtimeResult longtime_convergence(const Field& f, const Kernel& kernel,
                                    const std::vector<double>& T_list, double dt) {
    if (T_list.empty()) throw std::invalid_argument("longtime_convergence: empty T list");
    if (f.min() < -1e-12)
        throw std::invalid_argument("longtime_convergence: datum must be nonnegative");

    LongtimeResult result;
    result.mesa = mesa_project(f, kernel);

    SolverConfig cfg;
    cfg.dt = dt;
    cfg.t_end = *std::max_element(T_list.begin(), T_list.end());
    cfg.snapshot_times = T_list;
    std::sort(cfg.snapshot_times.begin(), cfg.snapshot_times.end());
    result.trajectory = evolve(f, kernel, cfg);

    for (double T : cfg.snapshot_times) {
        const Field& u = result.trajectory.at(T);
        result.T.push_back(T);
        result.l1_error.push_back(l1_distance(u, result.mesa));
        result.l1_v.push_back(l1_norm(temperature(u)));
    }
    return result;
}

} // namespace nlstefan
