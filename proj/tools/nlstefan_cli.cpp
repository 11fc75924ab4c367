// Command line front end: runs the built-in experiments or custom configs
// and writes CSV outputs (plus optional SVG plots) under --out.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nlstefan/config.hpp"
#include "nlstefan/csv_io.hpp"
#include "nlstefan/errors.hpp"
#include "nlstefan/geometry.hpp"
#include "nlstefan/local_limit.hpp"
#include "nlstefan/nonlocal_heat.hpp"
#include "nlstefan/obstacle.hpp"
#include "nlstefan/plot.hpp"
#include "nlstefan/presets.hpp"
#include "nlstefan/stefan.hpp"

namespace fs = std::filesystem;
using namespace nlstefan;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string preset_name;
    std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "flat key = value config file");
    cmd->add_option("--preset", opts.preset_name,
                    "preset name (shortcut for initial.preset)");
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
}

ExperimentConfig load_config(const CommonOpts& opts) {
    KeyValues kv;
    if (!opts.config_path.empty()) kv = parse_config_file(opts.config_path);
    if (!opts.preset_name.empty()) kv["initial.preset"] = opts.preset_name;
    if (kv.empty()) throw ConfigError("need --config or --preset");
    return build_config(kv);
}

fs::path prepare_out(const CommonOpts& opts, const ExperimentConfig& cfg) {
    const fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    std::ofstream resolved(dir / "config.resolved");
    if (!resolved) throw ConfigError("cannot write " + (dir / "config.resolved").string());
    resolved << cfg.resolved_text();
    return dir;
}

std::string snapshot_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "u_%04d.csv", index);
    return buf;
}

void write_trajectory(const fs::path& dir, const Trajectory& traj) {
    std::ofstream manifest(dir / "snapshots.csv");
    manifest << "index,t,file\n";
    for (int k = 0; k < traj.size(); ++k) {
        const std::string file = snapshot_name(k);
        write_field_csv((dir / file).string(), traj.snapshots[static_cast<size_t>(k)]);
        manifest << k << ',' << format_full(traj.times[static_cast<size_t>(k)]) << ',' << file
                 << '\n';
    }
    std::vector<double> t, mass, sup_u, l1_v;
    for (const auto& d : traj.diagnostics) {
        t.push_back(d.t);
        mass.push_back(d.mass);
        sup_u.push_back(d.sup_u);
        l1_v.push_back(d.l1_v);
    }
    write_table_csv((dir / "diagnostics.csv").string(), {"t", "mass", "sup_u", "l1_v"},
                    {t, mass, sup_u, l1_v});
}

void append_supports(std::ofstream& out, double t, const char* kind, const SupportSet& s) {
    for (int i = 0; i < s.count(); ++i)
        out << format_full(t) << ',' << kind << ',' << i << ','
            << format_full(s.intervals[static_cast<size_t>(i)].a) << ','
            << format_full(s.intervals[static_cast<size_t>(i)].b) << '\n';
}

int cmd_simulate(const CommonOpts& opts) {
    const ExperimentConfig cfg = load_config(opts);
    const fs::path dir = prepare_out(opts, cfg);
    const Trajectory traj = evolve(cfg.datum, cfg.kernel, cfg.solver);
    if (!traj.domain_bound_proven)
        std::cerr << "note: the a-priori localization interval exceeds the grid; "
                     "the run is guarded by the runtime boundary check instead\n";
    write_trajectory(dir, traj);
    if (cfg.plot) {
        std::vector<std::string> labels;
        for (double t : traj.times) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "t=%g", t);
            labels.push_back(buf);
        }
        render_plot(traj.snapshots, (dir / "snapshots.svg").string(), labels);
    }
    std::cout << "wrote " << traj.size() << " snapshots to " << dir << "\n";
    return 0;
}

int cmd_analyze(const std::string& traj_dir, const std::string& out_dir) {
    const fs::path dir(traj_dir);
    std::ifstream manifest(dir / "snapshots.csv");
    if (!manifest) throw ConfigError("cannot read " + (dir / "snapshots.csv").string());

    double support_delta = 0.0, mushy_delta = 1e-6;
    if (fs::exists(dir / "config.resolved")) {
        const KeyValues kv = parse_config_file((dir / "config.resolved").string());
        if (auto it = kv.find("analysis.support_delta"); it != kv.end())
            support_delta = std::stod(it->second);
        if (auto it = kv.find("analysis.mushy_delta"); it != kv.end())
            mushy_delta = std::stod(it->second);
    }

    const fs::path out_path = out_dir.empty() ? dir : fs::path(out_dir);
    fs::create_directories(out_path);
    std::ofstream out(out_path / "supports.csv");
    if (!out) throw ConfigError("cannot write " + (out_path / "supports.csv").string());
    out << "t,set_kind,interval_index,a,b\n";

    std::string line;
    std::getline(manifest, line); // header
    bool first = true;
    while (std::getline(manifest, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw ConfigError("snapshots.csv: malformed row '" + line + "'");
        const double t = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        const Field u = read_field_csv((dir / line.substr(c2 + 1)).string());
        if (first && support_delta == 0.0) {
            const double sup = u.max_abs();
            support_delta = sup > 0.0 ? 1e-8 * sup : 1e-12;
        }
        first = false;
        const Field v = temperature(u);
        append_supports(out, t, "supp_u", support(u, support_delta));
        append_supports(out, t, "supp_v", support(v, support_delta));
        append_supports(out, t, "mushy", mushy_region(u, mushy_delta));
        append_supports(out, t, "water_component", water_components(v, support_delta));
    }
    std::cout << "wrote " << (out_path / "supports.csv") << "\n";
    return 0;
}

int cmd_limit_eps(const CommonOpts& opts) {
    const ExperimentConfig cfg = load_config(opts);
    const fs::path dir = prepare_out(opts, cfg);
    const EpsStudy study =
        eps_convergence_study(cfg.datum, cfg.kernel, cfg.eps_list, cfg.eps_t_eval);
    std::vector<double> eps, err, mushy;
    for (const auto& row : study.rows) {
        eps.push_back(row.eps);
        err.push_back(row.l1_error);
        mushy.push_back(row.mushy_measure);
    }
    write_table_csv((dir / "eps_study.csv").string(), {"eps", "l1_error", "mushy_measure"},
                    {eps, err, mushy});
    if (cfg.plot) {
        std::vector<Field> fields = study.nonlocal_solutions;
        std::vector<std::string> labels;
        for (const auto& row : study.rows) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "eps=%g", row.eps);
            labels.push_back(buf);
        }
        fields.push_back(study.local_solution);
        labels.push_back("local");
        render_plot(fields, (dir / "eps_study.svg").string(), labels);
    }
    std::cout << "wrote " << (dir / "eps_study.csv") << "\n";
    return 0;
}

int cmd_mesa(const CommonOpts& opts) {
    const ExperimentConfig cfg = load_config(opts);
    const fs::path dir = prepare_out(opts, cfg);
    const ObstacleSolution sol =
        obstacle_solve(cfg.datum, cfg.kernel, cfg.obstacle_tol, cfg.obstacle_max_iter);
    std::vector<double> xs(static_cast<size_t>(cfg.grid.n));
    for (int i = 0; i < cfg.grid.n; ++i) xs[static_cast<size_t>(i)] = cfg.grid.node(i);
    write_table_csv((dir / "mesa.csv").string(), {"x", "f", "w", "mesa"},
                    {xs, cfg.datum.values, sol.w.values, sol.mesa.values});

    const LongtimeResult lt =
        longtime_convergence(cfg.datum, cfg.kernel, cfg.mesa_T_list, cfg.solver.dt);
    write_table_csv((dir / "convergence.csv").string(), {"T", "l1_error", "l1_v"},
                    {lt.T, lt.l1_error, lt.l1_v});
    if (cfg.plot)
        render_plot({cfg.datum, sol.mesa, sol.w}, (dir / "mesa.svg").string(),
                    {"f", "mesa", "w"});
    std::cout << "wrote " << (dir / "mesa.csv") << " (obstacle iterations: " << sol.iterations
              << ")\n";
    return 0;
}

int cmd_heat_decay(const CommonOpts& opts) {
    const ExperimentConfig cfg = load_config(opts);
    const fs::path dir = prepare_out(opts, cfg);
    const auto rows = decay_check(cfg.datum, cfg.kernel, cfg.heat_t_list);
    std::vector<double> t, d, l1_u, sup_reg;
    for (const auto& [ti, di] : rows) {
        t.push_back(ti);
        d.push_back(di);
        l1_u.push_back(l1_norm(heat_nonlocal(cfg.datum, cfg.kernel, ti)));
        sup_reg.push_back(regular_part(cfg.datum, cfg.kernel, ti).max_abs());
    }
    write_table_csv((dir / "decay.csv").string(), {"t", "D", "l1_u", "sup_regular_part"},
                    {t, d, l1_u, sup_reg});
    std::cout << "wrote " << (dir / "decay.csv") << "\n";
    return 0;
}

int cmd_preset_list() {
    for (const auto& name : preset_names()) {
        const ExperimentConfig c = preset(name);
        std::cout << name << ": grid [" << c.grid.xmin << ", " << c.grid.xmax << "] n = "
                  << c.grid.n << ", t_end = " << c.solver.t_end << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nonlocal one-phase Stefan problem simulator"};
    app.require_subcommand(1);

    CommonOpts sim_opts, eps_opts, mesa_opts, heat_opts;
    std::string traj_dir, analyze_out;

    CLI::App* sim = app.add_subcommand("simulate", "integrate the evolution and dump snapshots");
    add_common(sim, sim_opts);
    CLI::App* ana = app.add_subcommand("analyze", "extract supports from a trajectory directory");
    ana->add_option("--trajectory", traj_dir, "directory written by simulate")->required();
    ana->add_option("--out", analyze_out, "output directory (defaults to the trajectory dir)");
    CLI::App* eps = app.add_subcommand("limit-eps", "rescaled-kernel convergence study");
    add_common(eps, eps_opts);
    CLI::App* mes = app.add_subcommand("mesa", "obstacle problem and long-time convergence");
    add_common(mes, mesa_opts);
    CLI::App* heat = app.add_subcommand("heat-decay", "linear nonlocal heat decay estimates");
    add_common(heat, heat_opts);
    app.add_subcommand("preset-list", "list the built-in experiments");

    try {
        app.parse(argc, argv);
        if (sim->parsed()) return cmd_simulate(sim_opts);
        if (ana->parsed()) return cmd_analyze(traj_dir, analyze_out);
        if (eps->parsed()) return cmd_limit_eps(eps_opts);
        if (mes->parsed()) return cmd_mesa(mesa_opts);
        if (heat->parsed()) return cmd_heat_decay(heat_opts);
        return cmd_preset_list();
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
