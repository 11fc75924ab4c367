#pragma once

#include <vector>

#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"

namespace nlstefan {

struct Interval {
    double a = 0.0;
    double b = 0.0;
    double length() const { return b - a; }
    bool contains(double x) const { return a <= x && x <= b; }
};

/// Finite union of closed disjoint intervals; the discrete stand-in for a
/// distributional support. Intervals are cell-centered: a run of nodes
/// x_i..x_j becomes [x_i - h/2, x_j + h/2], so they are never degenerate.
struct SupportSet {
    std::vector<Interval> intervals;
    double threshold = 0.0;

    int count() const { return static_cast<int>(intervals.size()); }
    bool empty() const { return intervals.empty(); }
    double total_measure() const;
    double min() const; ///< leftmost endpoint; +inf when empty
    double max() const; ///< rightmost endpoint; -inf when empty

    bool contains_point(double x) const;
    /// True when a single interval of the set covers all of [a, b].
    bool covers_interval(double a, double b) const;
    /// True when every interval of the set lies inside the union of the
    /// given intervals, each dilated by `slack` per endpoint.
    bool subset_of(const std::vector<Interval>& cover, double slack) const;
    /// Convenience: subset of one interval.
    bool subset_of(const Interval& cover, double slack) const {
        return subset_of(std::vector<Interval>{cover}, slack);
    }
};

/// Maximal intervals of consecutive nodes with |value| > delta, merged
/// across single-node gaps.
SupportSet support(const Field& field, double delta);

/// Intervals of nodes with delta < u < 1 - delta: the discrete mushy
/// region. Requires delta in (0, 0.5).
SupportSet mushy_region(const Field& u, double delta);

/// Connected components of {v > delta}: the water regions.
SupportSet water_components(const Field& v, double delta);

/// The waiting time t_0 = 1/(sup J_eps * ||f||_1) during which the support
/// of the temperature stays frozen. Unscaled-time bound for the kernel as
/// given; the eps^-2 speedup of the rescaled evolution is the caller's
/// concern.
double waiting_time(const Field& f, const Kernel& kernel);

struct SupportBounds {
    double r_v = 0.0;   ///< temperature support stays in [center-r_v, center+r_v]
    double r_u = 0.0;   ///< enthalpy support stays in [center-r_u, center+r_u]
    double center = 0.0;
    double r_f = 0.0;   ///< support radius of the datum about the center
};

/// All-time localization radii for compactly supported data and a kernel
/// nonincreasing in the radial variable: r_v = max(1, ||f||_inf)^(1/N) r_f
/// and r_u = max(r_f, r_v + eps*R_J). Refuses kernels without the
/// nonincreasing flag, where the bound is unproven.
SupportBounds support_bounds(const Field& f, const Kernel& kernel);

} // namespace nlstefan
