#pragma once

#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"
#include "nlstefan/stefan.hpp"

namespace nlstefan {

/// Baiocchi variable w(T) = int_0^T v(s) ds by trapezoidal accumulation of
/// the temperature snapshots. Needs at least two snapshots.
Field baiocchi(const Trajectory& trajectory);

struct ObstacleResiduals {
    double neg_w = 0.0;   ///< sup of the negative part of w
    double lower = 0.0;   ///< sup of the negative part of the mesa
    double upper = 0.0;   ///< sup of (mesa - 1)_+
    double compl_ = 0.0;  ///< int |(mesa - 1) * w|
};

struct ObstacleSolution {
    Field w;    ///< Baiocchi limit w_inf
    Field mesa; ///< f + J*w - w
    ObstacleResiduals residuals;
    long iterations = 0; ///< sweeps that changed w
};

/// Solves the nonlocal obstacle problem
///   w >= 0,  0 <= f + J*w - w <= 1,  (f + J*w - w - 1) w = 0
/// by the monotone fixed-point iteration w <- (f + J*w - 1)_+ from w = 0,
/// stopped when the L1 difference of consecutive iterates drops below tol.
/// The iterate is nondecreasing in every node at every sweep, which is the
/// convergence certificate; the direct convolution path keeps that exact
/// in floating point.
ObstacleSolution obstacle_solve(const Field& f, const Kernel& kernel, double tol = 1e-10,
                                long max_iter = 1000000);

/// The mesa projection P: f -> f + J*w - w with w the obstacle solution.
Field mesa_project(const Field& f, const Kernel& kernel);

struct LongtimeResult {
    std::vector<double> T;
    std::vector<double> l1_error; ///< || u(T) - Pf ||_1
    std::vector<double> l1_v;     ///< || v(T) ||_1
    Field mesa;
    Trajectory trajectory;
};

/// Evolves f up to max(T_list) and measures the distance to the mesa at
/// each requested time, together with the temperature decay.
LongtimeResult longtime_convergence(const Field& f, const Kernel& kernel,
                                    const std::vector<double>& T_list, double dt = 0.0);

} // namespace nlstefan
