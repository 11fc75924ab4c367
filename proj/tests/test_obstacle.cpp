#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "nlstefan/convolution.hpp"
#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"
#include "nlstefan/linear_fit.hpp"
#include "nlstefan/obstacle.hpp"
#include "nlstefan/presets.hpp"
#include "support/oracles.hpp"

using namespace nlstefan;

TEST_SUITE_BEGIN("obstacle");

namespace {
Field block(const Grid& g, double amp, double lo, double hi) {
    return Field::sample(g, [=](double x) { return x >= lo && x <= hi ? amp : 0.0; });
}
} // namespace

TEST_CASE("data below the obstacle are untouched") {
    const Grid g(-4.0, 4.0, 512);
    const Field f = block(g, 0.9, -1.0, 1.0);
    const ObstacleSolution sol = obstacle_solve(f, make_polynomial_kernel());
    CHECK(sol.iterations == 0);
    for (int i = 0; i < g.n; ++i) {
        CHECK(sol.w[i] == 0.0);
        CHECK(sol.mesa[i] == f[i]);
    }
}

TEST_CASE("mushy datum: residuals, mass, plateau") {
    const Grid g(-6.0, 6.0, 1024);
    const Field f = block(g, 2.0, -1.0, 1.0);
    const ObstacleSolution sol = obstacle_solve(f, make_polynomial_kernel());

    CHECK(sol.residuals.neg_w <= 1e-12);
    CHECK(sol.residuals.lower <= 1e-8);
    CHECK(sol.residuals.upper <= 1e-8);
    CHECK(sol.residuals.compl_ <= 1e-8);
    CHECK(integrate(sol.mesa) == doctest::Approx(integrate(f)).epsilon(1e-4));

    // mesa = 1 on the non-coincidence set {w > 0}.
    for (int i = 0; i < g.n; ++i)
        if (sol.w[i] > 1e-10) CHECK(std::abs(sol.mesa[i] - 1.0) <= 1e-6);

    // Fixed-point characterization on both sides of the split.
    const Field jw = convolve(sol.w, make_polynomial_kernel(), ConvMethod::direct);
    for (int i = 0; i < g.n; ++i) {
        const double lifted = f[i] + jw[i] - sol.w[i];
        if (sol.w[i] > 1e-10) CHECK(std::abs(lifted - 1.0) <= 1e-9);
        else CHECK(lifted <= 1.0 + 1e-9);
    }
}

TEST_CASE("monotone iteration: nodewise nondecreasing, exactly") {
    const Grid g(-6.0, 6.0, 700);
    const Field f = block(g, 2.0, -1.0, 1.0);
    const KernelTaps taps = make_taps(make_polynomial_kernel(), g.h());
    Field w(g);
    for (int sweep = 0; sweep < 40; ++sweep) {
        const Field jw = convolve(w, taps, ConvMethod::direct);
        Field next(g);
        for (int i = 0; i < g.n; ++i) next[i] = std::max(f[i] + jw[i] - 1.0, 0.0);
        for (int i = 0; i < g.n; ++i) REQUIRE(next[i] >= w[i]);
        w = next;
    }
}

TEST_CASE("comparison: larger data produce larger obstacle solutions") {
    const Grid g(-6.0, 6.0, 800);
    std::mt19937 rng(31);
    const Field f1 = nlstefan::testing::random_datum(g, rng, 2.0, 2.0);
    Field f2 = f1;
    for (int i = 0; i < g.n; ++i)
        f2[i] = std::min(2.5, f2[i] + (std::abs(g.node(i)) < 1.0 ? 0.4 : 0.0));
    const Kernel k = make_polynomial_kernel();
    const ObstacleSolution s1 = obstacle_solve(f1, k);
    const ObstacleSolution s2 = obstacle_solve(f2, k);
    for (int i = 0; i < g.n; ++i) CHECK(s1.w[i] <= s2.w[i] + 1e-9);
}

TEST_CASE("mesa projection is idempotent and mass preserving") {
    const Grid g(-6.0, 6.0, 800);
    const Field f = block(g, 2.0, -1.0, 1.0);
    const Kernel k = make_polynomial_kernel();
    const Field once = mesa_project(f, k);
    CHECK(once.max() <= 1.0 + 1e-8);
    CHECK(once.min() >= -1e-8);
    const Field twice = mesa_project(once, k);
    CHECK(l1_distance(once, twice) <= 1e-6);
    CHECK(integrate(once) == doctest::Approx(integrate(f)).epsilon(1e-4));
}

TEST_CASE("mesa projection of the piecewise preset datum") {
    const ExperimentConfig cfg = preset("mesa");
    const Field pf = mesa_project(cfg.datum, cfg.kernel);
    CHECK(pf.min() >= -1e-8);
    CHECK(pf.max() <= 1.0 + 1e-8);
    // The high-enthalpy hump melts completely: the projection plateaus at 1
    // across it.
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const int i = static_cast<int>(std::lround((x - cfg.grid.xmin) / cfg.grid.h()));
        CHECK(pf[i] == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK(integrate(pf) == doctest::Approx(integrate(cfg.datum)).epsilon(1e-4));
}

TEST_CASE("mesa projection contracts in L1") {
    const Grid g(-8.0, 8.0, 1024);
    std::mt19937 rng(37);
    const Kernel k = make_polynomial_kernel();
    for (int trial = 0; trial < 5; ++trial) {
        const Field f1 = nlstefan::testing::random_datum(g, rng);
        const Field f2 = nlstefan::testing::random_datum(g, rng);
        const Field p1 = mesa_project(f1, k);
        const Field p2 = mesa_project(f2, k);
        CHECK(l1_distance(p1, p2) <= l1_distance(f1, f2) + 1e-6);
    }
}

TEST_CASE("divergence guard reports instead of looping") {
    const Grid g(-8.0, 8.0, 512);
    const Field f = block(g, 5.0, -3.0, 3.0);
    CHECK_THROWS_AS(obstacle_solve(f, make_polynomial_kernel(), 1e-12, 3), NumericError);
}

TEST_CASE("baiocchi accumulation") {
    const Grid g(-6.0, 6.0, 1024);
    const Kernel k = make_polynomial_kernel();

    Trajectory too_short;
    too_short.times = {0.0};
    too_short.snapshots = {Field(g)};
    CHECK_THROWS_AS(baiocchi(too_short), std::invalid_argument);

    // f <= 1: w stays identically zero.
    {
        SolverConfig cfg;
        cfg.dt = 0.05;
        cfg.t_end = 0.5;
        cfg.snapshot_times = {0.25, 0.5};
        const Trajectory traj = evolve(block(g, 0.9, -1.0, 1.0), k, cfg);
        const Field w = baiocchi(traj);
        for (int i = 0; i < g.n; ++i) CHECK(w[i] == 0.0);
    }

    // Reconstruction identity u(T) = f + J*w(T) - w(T) and monotone growth.
    const Field f = block(g, 2.0, -1.0, 1.0);
    SolverConfig cfg;
    cfg.dt = 2e-3;
    cfg.t_end = 1.0;
    for (int i = 1; i <= 50; ++i) cfg.snapshot_times.push_back(0.02 * i);
    const Trajectory traj = evolve(f, k, cfg);

    Trajectory half = traj;
    half.times.resize(26);
    half.snapshots.resize(26);
    const Field w_half = baiocchi(half);
    const Field w_full = baiocchi(traj);
    for (int i = 0; i < g.n; ++i) CHECK(w_full[i] >= w_half[i] - 1e-15);

    const Field jw = convolve(w_full, k, ConvMethod::fft);
    Field reconstructed(g);
    for (int i = 0; i < g.n; ++i) reconstructed[i] = f[i] + jw[i] - w_full[i];
    CHECK(l1_distance(reconstructed, traj.at(1.0)) <= 1e-3);

    // The Baiocchi support tracks the temperature support (one cell).
    const SupportSet sw = support(w_full, 1e-10);
    const SupportSet sv = support(temperature(traj.at(1.0)), 1e-10);
    REQUIRE(sw.count() == 1);
    REQUIRE(sv.count() == 1);
    CHECK(std::abs(sw.min() - sv.min()) <= g.h());
    CHECK(std::abs(sw.max() - sv.max()) <= g.h());
}

TEST_CASE("evolution limit agrees with the obstacle solution (fast-decay datum)") {
    const Grid g(-4.0, 4.0, 1024);
    const Field f = block(g, 2.0, -0.25, 0.25);
    const Kernel k = make_polynomial_kernel();

    SolverConfig cfg;
    cfg.dt = 5e-3;
    cfg.t_end = 25.0;
    for (int i = 1; i <= 250; ++i) cfg.snapshot_times.push_back(0.1 * i);
    const Trajectory traj = evolve(f, k, cfg);
    const Field w_evolution = baiocchi(traj);

    const ObstacleSolution sol = obstacle_solve(f, k);
    CHECK(l1_distance(w_evolution, sol.w) <= 1e-2);
}

TEST_CASE("longtime convergence to the mesa") {
    const Grid g(-4.0, 4.0, 1024);
    const Field f = block(g, 2.0, -0.25, 0.25);
    const Kernel k = make_polynomial_kernel();

    const LongtimeResult lt = longtime_convergence(f, k, {1.0, 3.0, 6.0, 12.0}, 5e-3);
    for (size_t i = 1; i < lt.l1_error.size(); ++i) CHECK(lt.l1_error[i] < lt.l1_error[i - 1]);

    // Exponential decay of the temperature mass: log-linear tail fit.
    std::vector<double> ts, logv;
    for (const auto& d : lt.trajectory.diagnostics)
        if (d.t >= 4.0 && d.l1_v > 0.0) {
            ts.push_back(d.t);
            logv.push_back(std::log(d.l1_v));
        }
    const LinearFit fit = fit_linear(ts, logv);
    CHECK(fit.slope < 0.0);
    CHECK(fit.correlation <= -0.99);

    // f <= 1 gives zero errors at all times.
    const LongtimeResult flat =
        longtime_convergence(block(g, 0.9, -1.0, 1.0), k, {0.5, 1.0}, 0.05);
    for (double e : flat.l1_error) CHECK(e == 0.0);
}

TEST_SUITE_END();
