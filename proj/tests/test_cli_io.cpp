#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "nlstefan/config.hpp"
#include "nlstefan/csv_io.hpp"
#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"
#include "nlstefan/plot.hpp"
#include "nlstefan/presets.hpp"

using namespace nlstefan;
namespace fs = std::filesystem;

TEST_SUITE_BEGIN("cli_io");

namespace {
fs::path tmpdir() {
    const fs::path p = fs::temp_directory_path() / "nlstefan_test_io";
    fs::create_directories(p);
    return p;
}
} // namespace

TEST_CASE("presets reproduce the standard data") {
    const ExperimentConfig mushy = preset("mushy");
    CHECK(std::abs(integrate(mushy.datum) - 4.0) <= 2.0 * mushy.grid.h());
    CHECK(mushy.grid.n == 2048);

    const ExperimentConfig disc = preset("disconnected");
    CHECK(support(disc.datum, 1e-8).count() == 2);
    CHECK(disc.datum.max() == 2.5);

    const ExperimentConfig mesa = preset("mesa");
    CHECK(mesa.datum.max() == doctest::Approx(4.0).epsilon(1e-5));
    CHECK(mesa.grid.n == 4096);

    const ExperimentConfig eps = preset("eps-limit");
    REQUIRE(eps.eps_list.size() == 3);
    CHECK(eps.eps_list[0] == 1.0);
    CHECK(eps.eps_list[1] == 0.5);
    CHECK(eps.eps_list[2] == 0.2);

    CHECK_THROWS_AS(preset("nope"), ConfigError);
}

TEST_CASE("presets are deterministic") {
    const ExperimentConfig a = preset("mesa");
    const ExperimentConfig b = preset("mesa");
    CHECK(a.datum.values == b.datum.values);
    CHECK(a.resolved_text() == b.resolved_text());
}

TEST_CASE("field CSV round trip is bit identical") {
    const Grid g(-2.0, 3.0, 617);
    Field f = Field::sample(g, [](double x) { return std::sin(17.3 * x) * std::exp(x / 3.0); });
    f[13] = 1.0 / 3.0;
    f[14] = 1e-300;
    const fs::path path = tmpdir() / "roundtrip.csv";
    write_field_csv(path.string(), f);
    const Field back = read_field_csv(path.string());
    REQUIRE(back.grid.n == g.n);
    CHECK(back.grid.xmin == g.xmin);
    CHECK(back.grid.xmax == g.xmax);
    CHECK(back.values == f.values);
}

TEST_CASE("config parsing: comments, overrides, strictness") {
    const KeyValues kv = parse_config_text("# comment\n"
                                           "initial.preset = mushy\n"
                                           "solver.dt = 0.002   # trailing comment\n"
                                           "grid.n = 512\n"
                                           "\n"
                                           "kernel.epsilon = 0.5\n");
    const ExperimentConfig c = build_config(kv);
    CHECK(c.name == "mushy");
    CHECK(c.solver.dt == 0.002);
    CHECK(c.grid.n == 512);
    CHECK(c.kernel.epsilon() == 0.5);
    // The datum follows the overridden grid.
    CHECK(c.datum.size() == 512);
    CHECK(std::abs(integrate(c.datum) - 4.0) <= 2.0 * c.grid.h());

    CHECK_THROWS_AS(build_config(parse_config_text("initial.preset = mushy\nsolvr.dt = 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(build_config(parse_config_text("solver.dt = 0.01\n")), ConfigError);
    CHECK_THROWS_AS(build_config(parse_config_text("initial.preset = mushy\nsolver.dt = abc\n")),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text("initial.preset mushy\n"), ConfigError);
}

TEST_CASE("custom CSV data round through the config layer") {
    const Grid g(-3.0, 3.0, 301);
    const Field f = Field::sample(g, [](double x) { return std::abs(x) < 1.0 ? 1.5 : 0.0; });
    const fs::path path = tmpdir() / "datum.csv";
    write_field_csv(path.string(), f);
    const ExperimentConfig c =
        build_config(parse_config_text("initial.csv = " + path.string() + "\n"));
    CHECK(c.name == "custom-csv");
    CHECK(c.datum.values == f.values);
    CHECK_THROWS_AS(
        build_config(parse_config_text("initial.csv = " + path.string() + "\ngrid.n = 99\n")),
        ConfigError);
}

TEST_CASE("resolved text is parseable and stable") {
    const ExperimentConfig c = preset("mushy");
    const KeyValues kv = parse_config_text(c.resolved_text());
    CHECK(kv.at("initial.preset") == "mushy");
    CHECK(kv.at("kernel.profile") == "polynomial");
    const ExperimentConfig again = build_config(kv);
    CHECK(again.datum.values == c.datum.values);
}

TEST_CASE("render_plot: errors and structure") {
    CHECK_THROWS_AS(render_plot({}, (tmpdir() / "x.svg").string()), std::invalid_argument);
    CHECK_THROWS_AS(render_plot({Field(Grid(0, 1, 8))}, "/no/such/dir/x.svg"), ConfigError);

    const Grid g(-1.0, 1.0, 64);
    const Field a = Field::sample(g, [](double x) { return x * x; });
    const Field b = Field::sample(g, [](double x) { return 1.0 - x * x; });
    const fs::path svg = tmpdir() / "plot.svg";
    render_plot({a, b}, svg.string(), {"a", "b"});

    std::ifstream in(svg);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t polylines = 0;
    for (size_t pos = text.find("<polyline"); pos != std::string::npos;
         pos = text.find("<polyline", pos + 1))
        ++polylines;
    CHECK(polylines == 2);

    // The sibling CSV carries the same samples.
    const fs::path csv = tmpdir() / "plot.csv";
    REQUIRE(fs::exists(csv));
    std::ifstream cin_(csv);
    std::string header;
    std::getline(cin_, header);
    CHECK(header == "x,a,b");
}

TEST_SUITE_END();
