#include "nlstefan/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlstefan/errors.hpp"

namespace nlstefan {

namespace {

// Trapezoid of fn over [a, b] with at least ceil((b-a)/step) panels.
double trapezoid(const std::function<double(double)>& fn, double a, double b, double step) {
    const int panels = std::max(1, static_cast<int>(std::ceil((b - a) / step)));
    const double h = (b - a) / panels;
    double acc = 0.5 * (fn(a) + fn(b));
    for (int i = 1; i < panels; ++i) acc += fn(a + i * h);
    return acc * h;
}

} // namespace

Kernel::Kernel(Profile profile, double radius, double epsilon, int dim, std::string name)
    : profile_(std::move(profile)), radius_(radius), epsilon_(epsilon), dim_(dim),
      name_(std::move(name)) {
    if (!(radius_ > 0.0)) throw std::invalid_argument("Kernel: radius must be positive");
    if (!(epsilon_ > 0.0)) throw std::invalid_argument("Kernel: epsilon must be positive");
    if (dim_ != 1) throw std::invalid_argument("Kernel: only dimension 1 is supported");
    validate();
}

void Kernel::validate() {
    const int samples = 1000;
    sup_profile_ = 0.0;
    nonincreasing_ = true;
    double prev = profile_(0.0);
    for (int i = 0; i < samples; ++i) {
        const double r = radius_ * i / (samples - 1);
        const double j = profile_(r);
        if (!(j >= 0.0) || !std::isfinite(j))
            throw std::invalid_argument("Kernel: profile must be finite and nonnegative");
        sup_profile_ = std::max(sup_profile_, j);
        if (j > prev + 1e-12) nonincreasing_ = false;
        prev = j;
    }
    // Unit mass in 1D: int_-R^R J = 2 * int_0^R profile.
    const double m = 2.0 * trapezoid(profile_, 0.0, radius_, radius_ / 1000.0);
    if (std::abs(m - 1.0) > 1e-6)
        throw std::invalid_argument("Kernel: profile mass " + std::to_string(m) +
                                    " is not 1 within 1e-6; refusing to renormalize");
}

double Kernel::evaluate(double x) const {
    const double r = std::abs(x) / epsilon_;
    if (r > radius_) return 0.0;
    return profile_(r) / epsilon_;
}

double Kernel::sup_value() const { return sup_profile_ / epsilon_; }

Kernel Kernel::rescale(double eps) const {
    if (!(eps > 0.0)) throw std::invalid_argument("Kernel::rescale: eps must be positive");
    Kernel k(*this);
    k.epsilon_ = eps;
    return k;
}

Kernel make_polynomial_kernel() {
    return Kernel([](double r) { return r <= 1.0 ? 0.75 * (1.0 - r * r) : 0.0; },
                  1.0, 1.0, 1, "polynomial");
}

Kernel make_indicator_kernel() {
    return Kernel([](double r) { return r <= 1.0 ? 0.5 : 0.0; }, 1.0, 1.0, 1, "indicator");
}

Kernel make_table_kernel(const std::vector<std::pair<double, double>>& table, double epsilon) {
    if (table.size() < 2) throw ConfigError("table kernel: need at least two rows");
    for (size_t i = 1; i < table.size(); ++i)
        if (!(table[i].first > table[i - 1].first))
            throw ConfigError("table kernel: radii must be strictly increasing");
    if (table.front().first != 0.0)
        throw ConfigError("table kernel: first radius must be 0");
    const double radius = table.back().first;
    auto profile = [table](double r) {
        if (r >= table.back().first) return table.back().second;
        auto it = std::upper_bound(table.begin(), table.end(), r,
                                   [](double v, const auto& row) { return v < row.first; });
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double t = (r - lo.first) / (hi.first - lo.first);
        return lo.second + t * (hi.second - lo.second);
    };
    return Kernel(profile, radius, epsilon, 1, "custom-table");
}

double mass(const Kernel& kernel, double quad_step) {
    if (!(quad_step > 0.0)) throw std::invalid_argument("mass: quad_step must be positive");
    const double r = kernel.support_radius();
    return trapezoid([&](double x) { return kernel.evaluate(x); }, -r, r, quad_step);
}

double second_moment(const Kernel& kernel, double quad_step) {
    if (!(quad_step > 0.0))
        throw std::invalid_argument("second_moment: quad_step must be positive");
    const double r = kernel.radius();
    const auto& prof = kernel.profile();
    return trapezoid([&](double x) { return x * x * prof(std::abs(x)); }, -r, r, quad_step);
}

} // namespace nlstefan
