#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace nlstefan {

/// A convolution kernel J: radially symmetric, nonnegative, compactly
/// supported, with unit mass. Defined by a closed-form radial profile
/// r -> J(r) on [0, R_J] so that rescaling J_eps = eps^-N J(./eps) stays
/// exact; grid sampling happens in the convolution layer.
///
/// Kernels are immutable values and safe to share across threads.
class Kernel {
public:
    using Profile = std::function<double(double)>;

    /// Builds a kernel from a radial profile. The profile is validated at
    /// construction: nonnegative, and with unit mass to 1e-6 under
    /// trapezoidal quadrature at step R_J/1000. Profiles that fail are
    /// rejected rather than renormalized.
    Kernel(Profile profile, double radius, double epsilon = 1.0, int dim = 1,
           std::string name = "custom");

    /// Scaled kernel value J_eps(x) = eps^-N * profile(|x|/eps); exactly 0
    /// for |x| > eps*R_J and exactly even in x.
    double evaluate(double x) const;

    /// Unscaled support radius R_J.
    double radius() const { return radius_; }
    /// Scale parameter eps of J_eps.
    double epsilon() const { return epsilon_; }
    /// Spatial dimension N (this library requires N = 1).
    int dim() const { return dim_; }
    /// Support radius of the scaled kernel, eps*R_J.
    double support_radius() const { return epsilon_ * radius_; }
    /// sup J_eps = eps^-N * sup(profile).
    double sup_value() const;
    /// Whether the profile was detected nonincreasing in the radial
    /// variable (needed by the quantitative support bounds).
    bool nonincreasing() const { return nonincreasing_; }
    const std::string& name() const { return name_; }
    const Profile& profile() const { return profile_; }

    /// Returns the kernel with epsilon := eps (same profile). eps must be
    /// positive.
    Kernel rescale(double eps) const;

private:
    Profile profile_;
    double radius_;
    double epsilon_;
    int dim_;
    std::string name_;
    double sup_profile_ = 0.0;
    bool nonincreasing_ = true;

    void validate();
};

/// The experiment kernel J(x) = 0.75*(1 - x^2)_+ with R_J = 1, eps = 1.
Kernel make_polynomial_kernel();

/// Indicator profile (1/2)*1_{[-1,1]}. Admitted as a test fixture although
/// it is not continuous; flagged like any other kernel.
Kernel make_indicator_kernel();

/// Profile from a two-column table (r, J(r)) with linear interpolation;
/// the support radius is the largest tabulated r.
Kernel make_table_kernel(const std::vector<std::pair<double, double>>& table,
                         double epsilon = 1.0);

/// Trapezoidal quadrature of the scaled kernel over its support at the
/// given step; equals 1 up to O(quad_step^2) for admissible kernels.
double mass(const Kernel& kernel, double quad_step);

/// Second moment m2 = int |z|^2 J(z) dz of the UNSCALED kernel; the
/// diffusivity scale of the local limit is m2/2. Independent of eps.
double second_moment(const Kernel& kernel, double quad_step = 1e-4);

} // namespace nlstefan
