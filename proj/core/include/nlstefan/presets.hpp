#pragma once

#include <map>
#include <string>
#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"
#include "nlstefan/stefan.hpp"

namespace nlstefan {

/// Everything one experiment needs: kernel, grid, datum, solver settings
/// and the per-analysis parameters, with presets reproducing the four
/// standard setups (see preset()).
struct ExperimentConfig {
    std::string name = "custom";
    Kernel kernel = make_polynomial_kernel();
    Grid grid{-6.0, 6.0, 2048};
    Field datum;
    SolverConfig solver;

    double support_delta = 0.0; ///< 0 resolves to 1e-8 * sup|f|
    double mushy_delta = 1e-6;

    std::vector<double> eps_list{1.0, 0.5, 0.2};
    double eps_t_eval = 1.0;

    std::vector<double> mesa_T_list{1.0, 5.0, 10.0, 20.0};
    double obstacle_tol = 1e-10;
    long obstacle_max_iter = 1000000;

    std::vector<double> heat_t_list{5.0, 10.0, 20.0, 40.0, 80.0};

    bool plot = false;

    double resolved_support_delta() const;
    /// Flat key = value rendering, written as config.resolved next to the
    /// outputs of every run.
    std::string resolved_text() const;
};

/// The built-in experiments:
///  - "mushy":        f = 2*1_[-1,1], creation of mushy regions
///  - "disconnected": f = 2.5*1_[-1.25,-0.5] + 0.99*1_[0.5,1]
///  - "eps-limit":    the mushy datum under eps in {1, 0.5, 0.2}
///  - "mesa":         piecewise datum with long-time mesa limit
///  - "heat-decay":   indicator datum on a wide grid for the linear model
/// Unknown names raise ConfigError. Presets are deterministic.
ExperimentConfig preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace nlstefan
