#pragma once

#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"
#include "nlstefan/stefan.hpp"

namespace nlstefan {

/// Explicit finite differences for the local one-phase Stefan problem
///   du/dt = (m2/2) d2v/dx2,  v = (u-1)_+,
/// with zero Dirichlet padding. Requires dt <= h^2/(2*m2); per-step
/// diagnostics are decimated to at most ~4096 records.
Trajectory local_stefan_solve(const Field& f, double m2, double dt, double t_end,
                              const std::vector<double>& snapshot_times);

struct EpsStudyRow {
    double eps = 0.0;
    double l1_error = 0.0;      ///< || u_eps(t_eval) - u_local(t_eval) ||_1
    double mushy_measure = 0.0; ///< |M_eps(t_eval)| at threshold 1e-6
};

struct EpsStudy {
    double t_eval = 0.0;
    std::vector<EpsStudyRow> rows; ///< ordered as eps_list (decreasing)
    Field local_solution;          ///< reference at t_eval, on the study grid
    std::vector<Field> nonlocal_solutions;
};

/// Runs the rescaled evolution for each eps in a strictly decreasing list
/// and compares against the local solver at t_eval. The reference runs at
/// 4x spatial resolution (aligned nodes) and is restricted by sampling;
/// each eps-run uses dt = 0.1*eps^2.
EpsStudy eps_convergence_study(const Field& f, const Kernel& kernel,
                               const std::vector<double>& eps_list, double t_eval);

} // namespace nlstefan
