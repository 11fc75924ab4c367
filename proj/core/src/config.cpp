#include "nlstefan/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "nlstefan/csv_io.hpp"
#include "nlstefan/errors.hpp"

namespace nlstefan {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key + ": not a number: '" + v + "'");
    }
}

long to_long(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key + ": not an integer: '" + v + "'");
    }
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(to_double(key, item));
    }
    if (out.empty()) throw ConfigError(key + ": empty list");
    return out;
}

const std::set<std::string> kKnownKeys = {
    "initial.preset", "initial.csv",
    "kernel.profile", "kernel.epsilon", "kernel.table",
    "grid.xmin", "grid.xmax", "grid.n",
    "solver.scheme", "solver.dt", "solver.t_end", "solver.snapshots",
    "solver.gamma_n", "solver.picard_tol", "solver.picard_max_iter",
    "analysis.support_delta", "analysis.mushy_delta",
    "eps.list", "eps.t_eval",
    "mesa.t_list", "mesa.obstacle_tol", "mesa.obstacle_max_iter",
    "heat.t_list",
    "plot",
};

Kernel kernel_from(const KeyValues& kv, double epsilon) {
    std::string profile = "polynomial";
    if (auto it = kv.find("kernel.profile"); it != kv.end()) profile = it->second;
    if (profile == "polynomial") return make_polynomial_kernel().rescale(epsilon);
    if (profile == "indicator") return make_indicator_kernel().rescale(epsilon);
    if (profile == "custom-table") {
        auto it = kv.find("kernel.table");
        if (it == kv.end()) throw ConfigError("kernel.profile=custom-table needs kernel.table");
        std::ifstream in(it->second);
        if (!in) throw ConfigError("cannot read kernel table " + it->second);
        std::string line;
        std::vector<std::pair<double, double>> rows;
        bool first = true;
        while (std::getline(in, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw ConfigError(it->second + ": malformed row '" + line + "'");
            // Tolerate a header row.
            if (first && !std::isdigit(line[0]) && line[0] != '-' && line[0] != '+' &&
                line[0] != '.') {
                first = false;
                continue;
            }
            first = false;
            rows.emplace_back(to_double("kernel.table r", trim(line.substr(0, comma))),
                              to_double("kernel.table J", trim(line.substr(comma + 1))));
        }
        return make_table_kernel(rows, epsilon);
    }
    throw ConfigError("kernel.profile: unknown value '" + profile + "'");
}

} // namespace

KeyValues parse_config_text(const std::string& text) {
    KeyValues kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        kv[key] = value;
    }
    return kv;
}

KeyValues parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ExperimentConfig build_config(const KeyValues& kv) {
    for (const auto& [key, value] : kv) {
        (void)value;
        if (!kKnownKeys.count(key)) throw ConfigError("unknown config key '" + key + "'");
    }

    const bool has_preset = kv.count("initial.preset") > 0;
    const bool has_csv = kv.count("initial.csv") > 0;
    std::string preset_name = has_preset ? kv.at("initial.preset") : "custom-csv";
    if (preset_name == "custom-csv" && !has_csv)
        throw ConfigError("initial.preset=custom-csv needs initial.csv");
    if (!has_preset && !has_csv) throw ConfigError("need initial.preset or initial.csv");

    ExperimentConfig c;
    const bool custom = preset_name == "custom-csv";
    if (!custom) c = preset(preset_name);

    if (custom) {
        if (kv.count("grid.xmin") || kv.count("grid.xmax") || kv.count("grid.n"))
            throw ConfigError("custom-csv data carry their own grid; drop the grid.* keys");
        c.name = "custom-csv";
        c.datum = read_field_csv(kv.at("initial.csv"));
        c.grid = c.datum.grid;
        c.solver.dt = 1e-3;
        c.solver.t_end = 1.0;
        c.solver.snapshot_times = {1.0};
    } else if (kv.count("grid.xmin") || kv.count("grid.xmax") || kv.count("grid.n")) {
        Grid g = c.grid;
        if (auto it = kv.find("grid.xmin"); it != kv.end()) g.xmin = to_double(it->first, it->second);
        if (auto it = kv.find("grid.xmax"); it != kv.end()) g.xmax = to_double(it->first, it->second);
        if (auto it = kv.find("grid.n"); it != kv.end())
            g.n = static_cast<int>(to_long(it->first, it->second));
        const Grid resampled(g.xmin, g.xmax, g.n);
        // Re-sample the preset datum on the overridden grid, snapping to
        // exact base nodes so an identity override is an identity.
        const ExperimentConfig base = preset(preset_name);
        c.grid = resampled;
        if (resampled == base.grid) {
            c.datum = base.datum;
        } else {
            const Field& fine = base.datum;
            c.datum = Field::sample(resampled, [&](double x) {
                const Grid& bg = fine.grid;
                if (x <= bg.xmin) return fine[0];
                if (x >= bg.xmax) return fine[bg.n - 1];
                const double s = (x - bg.xmin) / bg.h();
                int i = std::min(bg.n - 2, static_cast<int>(s));
                double t = s - i;
                if (t > 1.0 - 1e-9) {
                    ++i;
                    t = 0.0;
                }
                if (t < 1e-9) return fine[i];
                return (1.0 - t) * fine[i] + t * fine[i + 1];
            });
        }
    }

    double epsilon = c.kernel.epsilon();
    if (auto it = kv.find("kernel.epsilon"); it != kv.end()) {
        epsilon = to_double(it->first, it->second);
        if (!(epsilon > 0.0)) throw ConfigError("kernel.epsilon must be positive");
    }
    if (kv.count("kernel.profile") || kv.count("kernel.table") || kv.count("kernel.epsilon"))
        c.kernel = kernel_from(kv, epsilon);

    if (auto it = kv.find("solver.scheme"); it != kv.end()) {
        if (it->second == "rk4") c.solver.scheme = Scheme::rk4;
        else if (it->second == "picard") c.solver.scheme = Scheme::picard;
        else if (it->second == "regularized") c.solver.scheme = Scheme::regularized;
        else throw ConfigError("solver.scheme: unknown value '" + it->second + "'");
    }
    if (auto it = kv.find("solver.dt"); it != kv.end())
        c.solver.dt = to_double(it->first, it->second);
    if (auto it = kv.find("solver.t_end"); it != kv.end())
        c.solver.t_end = to_double(it->first, it->second);
    if (auto it = kv.find("solver.snapshots"); it != kv.end())
        c.solver.snapshot_times = to_list(it->first, it->second);
    if (auto it = kv.find("solver.gamma_n"); it != kv.end())
        c.solver.gamma_index = static_cast<int>(to_long(it->first, it->second));
    if (auto it = kv.find("solver.picard_tol"); it != kv.end())
        c.solver.picard_tol = to_double(it->first, it->second);
    if (auto it = kv.find("solver.picard_max_iter"); it != kv.end())
        c.solver.picard_max_iter = static_cast<int>(to_long(it->first, it->second));

    if (auto it = kv.find("analysis.support_delta"); it != kv.end())
        c.support_delta = to_double(it->first, it->second);
    if (auto it = kv.find("analysis.mushy_delta"); it != kv.end())
        c.mushy_delta = to_double(it->first, it->second);

    if (auto it = kv.find("eps.list"); it != kv.end())
        c.eps_list = to_list(it->first, it->second);
    if (auto it = kv.find("eps.t_eval"); it != kv.end())
        c.eps_t_eval = to_double(it->first, it->second);

    if (auto it = kv.find("mesa.t_list"); it != kv.end())
        c.mesa_T_list = to_list(it->first, it->second);
    if (auto it = kv.find("mesa.obstacle_tol"); it != kv.end())
        c.obstacle_tol = to_double(it->first, it->second);
    if (auto it = kv.find("mesa.obstacle_max_iter"); it != kv.end())
        c.obstacle_max_iter = to_long(it->first, it->second);

    if (auto it = kv.find("heat.t_list"); it != kv.end())
        c.heat_t_list = to_list(it->first, it->second);

    if (auto it = kv.find("plot"); it != kv.end()) {
        if (it->second == "true") c.plot = true;
        else if (it->second == "false") c.plot = false;
        else throw ConfigError("plot: expected true or false");
    }
    return c;
}

} // namespace nlstefan
