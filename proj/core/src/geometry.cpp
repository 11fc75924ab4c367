#include "nlstefan/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlstefan {

namespace {

// Assembles the nodes satisfying pred into cell-centered intervals,
// bridging single-node gaps (floating-point dust at free boundaries would
// otherwise split components).
template <typename Pred>
SupportSet assemble(const Field& f, double delta, Pred&& pred) {
    SupportSet set;
    set.threshold = delta;
    const int n = f.size();
    const double h = f.grid.h();

    int run_start = -1;
    int last_hit = -2;
    auto flush = [&](int from, int to) {
        set.intervals.push_back({f.grid.node(from) - 0.5 * h, f.grid.node(to) + 0.5 * h});
    };
    for (int i = 0; i < n; ++i) {
        if (!pred(f[i])) continue;
        if (run_start < 0) {
            run_start = i;
        } else if (i - last_hit > 2) {
            flush(run_start, last_hit);
            run_start = i;
        }
        last_hit = i;
    }
    if (run_start >= 0) flush(run_start, last_hit);
    return set;
}

} // namespace

double SupportSet::total_measure() const {
    double acc = 0.0;
    for (const auto& iv : intervals) acc += iv.length();
    return acc;
}

double SupportSet::min() const {
    return intervals.empty() ? HUGE_VAL : intervals.front().a;
}

double SupportSet::max() const {
    return intervals.empty() ? -HUGE_VAL : intervals.back().b;
}

bool SupportSet::contains_point(double x) const {
    for (const auto& iv : intervals)
        if (iv.contains(x)) return true;
    return false;
}

bool SupportSet::covers_interval(double a, double b) const {
    for (const auto& iv : intervals)
        if (iv.a <= a && b <= iv.b) return true;
    return false;
}

bool SupportSet::subset_of(const std::vector<Interval>& cover, double slack) const {
    for (const auto& iv : intervals) {
        // March through the dilated cover intervals that overlap iv.
        double reached = iv.a;
        bool done = false;
        while (!done) {
            bool advanced = false;
            for (const auto& c : cover) {
                if (c.a - slack <= reached && reached < c.b + slack) {
                    reached = c.b + slack;
                    advanced = true;
                }
            }
            if (reached >= iv.b) {
                done = true;
            } else if (!advanced) {
                return false;
            }
        }
    }
    return true;
}

SupportSet support(const Field& field, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("support: delta must be positive");
    return assemble(field, delta, [delta](double v) { return std::abs(v) > delta; });
}

SupportSet mushy_region(const Field& u, double delta) {
    if (!(delta > 0.0 && delta < 0.5))
        throw std::invalid_argument("mushy_region: delta must lie in (0, 0.5)");
    return assemble(u, delta, [delta](double v) { return v > delta && v < 1.0 - delta; });
}

SupportSet water_components(const Field& v, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("water_components: delta must be positive");
    return assemble(v, delta, [delta](double x) { return x > delta; });
}

double waiting_time(const Field& f, const Kernel& kernel) {
    const double m = l1_norm(f);
    if (!(m > 0.0)) throw std::invalid_argument("waiting_time: datum has zero mass");
    return 1.0 / (kernel.sup_value() * m);
}

SupportBounds support_bounds(const Field& f, const Kernel& kernel) {
    if (!kernel.nonincreasing())
        throw std::invalid_argument(
            "support_bounds: kernel is not nonincreasing in the radius; the bound is unproven");
    SupportBounds b;
    const double sup = f.max_abs();
    const SupportSet s = support(f, sup > 0.0 ? 1e-8 * sup : 1e-300);
    if (s.empty()) return b;
    b.center = 0.5 * (s.min() + s.max());
    b.r_f = 0.5 * (s.max() - s.min());
    b.r_v = std::max(1.0, sup) * b.r_f; // N = 1
    b.r_u = std::max(b.r_f, b.r_v + kernel.support_radius());
    return b;
}

} // namespace nlstefan
