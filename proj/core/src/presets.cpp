#include "nlstefan/presets.hpp"

#include <cmath>
#include <sstream>

#include "nlstefan/csv_io.hpp"
#include "nlstefan/errors.hpp"

namespace nlstefan {

namespace {

double mushy_datum(double x) { return std::abs(x) <= 1.0 ? 2.0 : 0.0; }

double disconnected_datum(double x) {
    if (x >= -1.25 && x <= -0.5) return 2.5;
    if (x >= 0.5 && x <= 1.0) return 0.99;
    return 0.0;
}

double mesa_datum(double x) {
    if (x < -4.0) return 0.0;
    if (x <= -1.5) return std::max(std::sin(5.0 * x), 0.0);
    if (x < 1.5) return std::sin(2.0 * x) + 3.0;
    if (x <= 6.0) return 0.0;
    if (x < 6.5) return 0.3;
    return 0.0;
}

std::vector<double> spaced(double from, double to, double step) {
    std::vector<double> out;
    for (double t = from; t <= to + 1e-12; t += step) out.push_back(t);
    return out;
}

std::string join(const std::vector<double>& v) {
    std::ostringstream s;
    for (size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << format_full(v[i]);
    return s.str();
}

} // namespace

double ExperimentConfig::resolved_support_delta() const {
    if (support_delta > 0.0) return support_delta;
    const double sup = datum.max_abs();
    return sup > 0.0 ? 1e-8 * sup : 1e-12;
}

std::string ExperimentConfig::resolved_text() const {
    std::ostringstream s;
    s << "initial.preset = " << name << '\n';
    s << "kernel.profile = " << kernel.name() << '\n';
    s << "kernel.epsilon = " << format_full(kernel.epsilon()) << '\n';
    s << "grid.xmin = " << format_full(grid.xmin) << '\n';
    s << "grid.xmax = " << format_full(grid.xmax) << '\n';
    s << "grid.n = " << grid.n << '\n';
    s << "solver.scheme = "
      << (solver.scheme == Scheme::rk4        ? "rk4"
          : solver.scheme == Scheme::picard   ? "picard"
                                              : "regularized")
      << '\n';
    s << "solver.dt = " << format_full(solver.dt) << '\n';
    s << "solver.t_end = " << format_full(solver.t_end) << '\n';
    s << "solver.snapshots = " << join(solver.snapshot_times) << '\n';
    s << "solver.gamma_n = " << solver.gamma_index << '\n';
    s << "solver.picard_tol = " << format_full(solver.picard_tol) << '\n';
    s << "solver.picard_max_iter = " << solver.picard_max_iter << '\n';
    s << "analysis.support_delta = " << format_full(resolved_support_delta()) << '\n';
    s << "analysis.mushy_delta = " << format_full(mushy_delta) << '\n';
    s << "eps.list = " << join(eps_list) << '\n';
    s << "eps.t_eval = " << format_full(eps_t_eval) << '\n';
    s << "mesa.t_list = " << join(mesa_T_list) << '\n';
    s << "mesa.obstacle_tol = " << format_full(obstacle_tol) << '\n';
    s << "mesa.obstacle_max_iter = " << obstacle_max_iter << '\n';
    s << "heat.t_list = " << join(heat_t_list) << '\n';
    s << "plot = " << (plot ? "true" : "false") << '\n';
    return s.str();
}

ExperimentConfig preset(const std::string& name) {
    ExperimentConfig c;
    c.name = name;
    if (name == "mushy") {
        c.grid = Grid(-6.0, 6.0, 2048);
        c.datum = Field::sample(c.grid, mushy_datum);
        c.solver.dt = 1e-3;
        c.solver.t_end = 2.0;
        c.solver.snapshot_times = {0.1, 0.2, 0.3, 0.5, 1.0, 2.0};
    } else if (name == "disconnected") {
        c.grid = Grid(-4.0, 4.0, 2048);
        c.datum = Field::sample(c.grid, disconnected_datum);
        c.solver.dt = 1e-3;
        c.solver.t_end = 4.0;
        c.solver.snapshot_times = spaced(0.05, 4.0, 0.05);
    } else if (name == "eps-limit") {
        c.grid = Grid(-6.0, 6.0, 2048);
        c.datum = Field::sample(c.grid, mushy_datum);
        c.solver.dt = 1e-3;
        c.solver.t_end = 1.0;
        c.solver.snapshot_times = {1.0};
        c.eps_list = {1.0, 0.5, 0.2};
        c.eps_t_eval = 1.0;
    } else if (name == "mesa") {
        c.grid = Grid(-8.0, 10.0, 4096);
        c.datum = Field::sample(c.grid, mesa_datum);
        c.solver.dt = 0.01;
        c.solver.t_end = 20.0;
        c.solver.snapshot_times = {1.0, 5.0, 10.0, 20.0};
    } else if (name == "heat-decay") {
        c.grid = Grid(-50.0, 50.0, 16384);
        c.datum = Field::sample(c.grid, [](double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; });
        c.solver.dt = 1e-2;
        c.solver.t_end = 1.0;
        c.solver.snapshot_times = {1.0};
    } else {
        throw ConfigError("unknown preset '" + name + "'");
    }
    return c;
}

std::vector<std::string> preset_names() {
    return {"mushy", "disconnected", "eps-limit", "mesa", "heat-decay"};
}

} // namespace nlstefan
