#include <doctest.h>

#include <cmath>
#include <random>

#include "nlstefan/convolution.hpp"
#include "nlstefan/grid.hpp"
#include "nlstefan/kernel.hpp"
#include "support/oracles.hpp"

using namespace nlstefan;
using nlstefan::testing::fine_trapezoid;

TEST_SUITE_BEGIN("grid_conv");

namespace {
double rel_linf(const Field& a, const Field& b) {
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(a[i]));
    }
    return diff / std::max(scale, 1e-300);
}
} // namespace

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(Grid(0.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Grid(1.0, 1.0, 16), std::invalid_argument);
    const Grid g(-2.0, 2.0, 401);
    CHECK(g.h() == doctest::Approx(0.01));
    CHECK(g.node(0) == -2.0);
    CHECK(g.node(400) == doctest::Approx(2.0));
}

TEST_CASE("integrate: indicator and zero fields") {
    const Grid g(-6.0, 8.0, 1401); // h = 0.01, jump nodes aligned
    const Field f = Field::sample(g, [](double x) { return std::abs(x) <= 1.0 ? 2.0 : 0.0; });
    CHECK(std::abs(integrate(f) - 4.0) <= 2.0 * g.h() + 1e-12);
    CHECK(integrate(Field(g)) == 0.0);
}

TEST_CASE("integrate: piecewise datum matches a 10x finer quadrature") {
    auto datum = [](double x) {
        if (x < -4.0) return 0.0;
        if (x <= -1.5) return std::max(std::sin(5.0 * x), 0.0);
        if (x < 1.5) return std::sin(2.0 * x) + 3.0;
        if (x <= 6.0) return 0.0;
        if (x < 6.5) return 0.3;
        return 0.0;
    };
    const Grid g(-8.0, 10.0, 4096);
    const Field f = Field::sample(g, datum);
    const Grid g10(-8.0, 10.0, 40951); // 10x finer
    const Field f10 = Field::sample(g10, datum);
    CHECK(integrate(f) == doctest::Approx(integrate(f10)).epsilon(1e-3));
}

TEST_CASE("l1_distance") {
    const Grid g(-2.0, 2.0, 401);
    const Field a = Field::sample(g, [](double x) { return x >= 0.0 && x <= 1.0 ? 1.0 : 0.0; });
    const Field zero(g);
    CHECK(l1_distance(a, a) == 0.0);
    CHECK(std::abs(l1_distance(a, zero) - 1.0) <= 2.0 * g.h());
    CHECK(l1_distance(a, zero) == l1_distance(zero, a));
    const Grid other(-2.0, 2.0, 201);
    CHECK_THROWS_AS(l1_distance(a, Field(other)), std::invalid_argument);
}

TEST_CASE("convolve: zero field stays zero") {
    const Grid g(-3.0, 3.0, 601);
    const Field out = convolve(Field(g), make_polynomial_kernel(), ConvMethod::fft);
    for (int i = 0; i < out.size(); ++i) CHECK(out[i] == 0.0);
}

TEST_CASE("convolve: delta spike returns the kernel column") {
    const Grid g(-3.0, 3.0, 601); // h = 0.01
    const Kernel k = make_polynomial_kernel();
    Field spike(g);
    const int j = 300; // x = 0
    spike[j] = 1.0 / g.h();
    const Field out = convolve(spike, k, ConvMethod::direct);
    double max_err = 0.0;
    for (int i = 0; i < g.n; ++i)
        max_err = std::max(max_err, std::abs(out[i] - k.evaluate(g.node(i) - g.node(j))));
    CHECK(max_err <= 1e-4); // O(h^2) sampling defect
}

TEST_CASE("convolve: wide plateau returns 1 at interior points") {
    const Grid g(-4.0, 4.0, 801);
    const Field f = Field::sample(g, [](double x) { return std::abs(x) <= 2.5 ? 1.0 : 0.0; });
    const Field out = convolve(f, make_polynomial_kernel(), ConvMethod::fft);
    for (double x : {-1.0, 0.0, 0.5, 1.2}) {
        const int i = static_cast<int>(std::lround((x - g.xmin) / g.h()));
        CHECK(std::abs(out[i] - 1.0) <= 1e-6);
    }
}

TEST_CASE("convolve is linear to 1e-12") {
    const Grid g(-4.0, 4.0, 512);
    std::mt19937 rng(11);
    const Field a = nlstefan::testing::random_datum(g, rng);
    const Field b = nlstefan::testing::random_datum(g, rng);
    const Kernel k = make_polynomial_kernel();
    const double alpha = 0.7, beta = -1.3;
    Field combo(g);
    for (int i = 0; i < g.n; ++i) combo[i] = alpha * a[i] + beta * b[i];
    const Field lhs = convolve(combo, k, ConvMethod::fft);
    const Field ca = convolve(a, k, ConvMethod::fft);
    const Field cb = convolve(b, k, ConvMethod::fft);
    Field rhs(g);
    for (int i = 0; i < g.n; ++i) rhs[i] = alpha * ca[i] + beta * cb[i];
    CHECK(rel_linf(lhs, rhs) <= 1e-12);
}

TEST_CASE("convolve preserves nonnegativity exactly") {
    const Grid g(-4.0, 4.0, 700);
    std::mt19937 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const Field f = nlstefan::testing::random_datum(g, rng);
        const Field out = convolve(f, make_polynomial_kernel(), ConvMethod::direct);
        for (int i = 0; i < g.n; ++i) CHECK(out[i] >= 0.0);
    }
}

TEST_CASE("discrete mass identity for interior-supported data") {
    const Grid g(-6.0, 6.0, 1024);
    std::mt19937 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        const Field f = nlstefan::testing::random_datum(g, rng, 2.0);
        const Field out = convolve(f, make_polynomial_kernel(), ConvMethod::direct);
        CHECK(integrate(out) == doctest::Approx(integrate(f)).epsilon(1e-12));
    }
}

TEST_CASE("direct and fft paths agree to 1e-12 relative") {
    const Kernel k = make_polynomial_kernel();
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 256 + (trial % 5) * 311;
        const Grid g(-5.0, 5.0, n);
        const Field f = nlstefan::testing::random_datum(g, rng, 4.0);
        const Field d = convolve(f, k, ConvMethod::direct);
        const Field s = convolve(f, k, ConvMethod::fft);
        CHECK(rel_linf(d, s) <= 1e-12);
    }
}

TEST_CASE("kernel wider than the domain is rejected") {
    const Grid g(-0.4, 0.4, 64);
    CHECK_THROWS_AS(convolve(Field(g), make_polynomial_kernel(), ConvMethod::direct),
                    std::invalid_argument);
}

TEST_CASE("raw tap mass defect is small and tracked") {
    const KernelTaps taps = make_taps(make_polynomial_kernel(), 12.0 / 2047.0);
    CHECK(std::abs(taps.raw_mass - 1.0) < 1e-4);
    CHECK(taps.raw_mass != 1.0); // the defect exists; normalization hides it from sums only
}

TEST_SUITE_END();
