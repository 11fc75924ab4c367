#pragma once

#include <vector>

#include "nlstefan/convolution.hpp"
#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"

namespace nlstefan {

/// Pointwise temperature v = (u - 1)_+.
Field temperature(const Field& u);

/// Right-hand side eps^-2 (J_eps * v - v), v = (u-1)_+. With eps = 1 this
/// is the unscaled evolution operator.
Field rhs(const Field& u, const Kernel& kernel, ConvMethod method = ConvMethod::auto_select);

/// The Lipschitz regularization of s -> (s-1)_+ used by the regularized
/// scheme: gamma_n(s) = s/(n+1) for s <= (n+1)/n and s - 1 beyond.
double gamma_n(double s, int n);

enum class Scheme { rk4, picard, regularized };

struct SolverConfig {
    Scheme scheme = Scheme::rk4;
    double dt = 0.0;    ///< 0 selects the default 0.1*eps^2
    double t_end = 1.0;
    std::vector<double> snapshot_times; ///< strictly increasing; 0 is implicit
    int gamma_index = 8;    ///< n of the regularized scheme
    double picard_tol = 1e-10;
    int picard_max_iter = 200;
    ConvMethod conv = ConvMethod::auto_select;
};

struct StepDiag {
    double t = 0.0;
    double mass = 0.0;
    double sup_u = 0.0;
    double l1_v = 0.0;
};

/// Time-ordered snapshots plus per-step diagnostics. The first snapshot is
/// always (0, f).
struct Trajectory {
    std::vector<double> times;
    std::vector<Field> snapshots;
    std::vector<StepDiag> diagnostics;
    bool domain_bound_proven = true; ///< a-priori localization fit in the grid

    int size() const { return static_cast<int>(times.size()); }
    /// Snapshot at time t (within rounding); throws when absent.
    const Field& at(double t) const;
};

/// Integrates du/dt = eps^-2 (J_eps * v - v) from u(0) = f.
///
/// Structural properties of the continuum problem (sup bound, positivity)
/// are enforced as runtime diagnostics: the run aborts with NumericError if
/// sup u(t) exceeds sup f beyond tolerance or if the support reaches the
/// domain boundary, where zero-extension would start discarding mass.
Trajectory evolve(const Field& f, const Kernel& kernel, const SolverConfig& config);

struct PicardResult {
    Field u;                       ///< state at t = window
    std::vector<double> residuals; ///< successive sweep differences
    int iterations = 0;
};

/// Fixed point of the integral operator
///   (T u)(t) = f + int_0^t eps^-2 (J_eps*(u-1)_+ - (u-1)_+) ds
/// on [0, window], iterated until the sup-in-time L1-in-space difference of
/// consecutive sweeps drops below tol. The contraction constant is
/// 2*window/eps^2, so window < eps^2/2 is required. Serves as an
/// independent oracle for evolve.
///
/// substeps = 0 picks ceil(window / (1e-3 * eps^2)), at least 16.
PicardResult picard_window(const Field& u0, const Kernel& kernel, double window,
                           double tol = 1e-10, int max_iter = 200, int substeps = 0);

} // namespace nlstefan
