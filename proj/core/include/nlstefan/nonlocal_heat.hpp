#pragma once

#include <utility>
#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"

namespace nlstefan {

/// Fourier symbol of the scaled kernel at frequency xi, computed by
/// quadrature of the radial profile against cosines and normalized so the
/// zero mode is exactly 1; the symmetric nonnegative profile then gives
/// |symbol| <= 1 structurally.
double kernel_symbol(const Kernel& kernel, double xi);

/// Solves u_t = J*u - u, u(0) = f, on the periodic cell of period n*h via
///   u_hat(xi, t) = exp((J_hat(xi) - 1) t) f_hat(xi).
/// The grid must leave room for the diffusion length sqrt(m2*t) around the
/// support of f, otherwise periodization would alias; violations raise
/// NumericError.
Field heat_nonlocal(const Field& f, const Kernel& kernel, double t);

/// The smooth part u(t) - e^-t f of the semigroup, evaluated spectrally as
/// (exp((J_hat - 1) t) - e^-t) f_hat.
Field regular_part(const Field& f, const Kernel& kernel, double t);

/// Spectral solution of the LOCAL heat equation h_t = (m2/2) h_xx with
/// h(0) = f (the comparison profile of the refined decay estimate).
Field heat_local_spectral(const Field& f, double m2, double t);

/// D(t) = t^(1/2) * max_x |u(t) - e^-t f - h(t)| for each t in t_list
/// (increasing, positive). The refined decay estimate predicts
/// D(t)/||f||_1 -> 0.
std::vector<std::pair<double, double>> decay_check(const Field& f, const Kernel& kernel,
                                                   const std::vector<double>& t_list);

} // namespace nlstefan
