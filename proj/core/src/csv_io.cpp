#include "nlstefan/csv_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "nlstefan/errors.hpp"

namespace nlstefan {

std::string format_full(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_field_csv(const std::string& path, const Field& field) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << "x,value\n";
    for (int i = 0; i < field.size(); ++i)
        out << format_full(field.grid.node(i)) << ',' << format_full(field[i]) << '\n';
    if (!out) throw ConfigError("failed while writing " + path);
}

Field read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty file");
    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigError(path + ": malformed row " + line);
        xs.push_back(std::stod(line.substr(0, comma)));
        vs.push_back(std::stod(line.substr(comma + 1)));
    }
    if (xs.size() < 3) throw ConfigError(path + ": need at least 3 rows");
    const int n = static_cast<int>(xs.size());
    const double h = (xs.back() - xs.front()) / (n - 1);
    for (int i = 1; i < n; ++i) {
        const double expected = xs.front() + i * h;
        if (std::abs(xs[static_cast<size_t>(i)] - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
            throw ConfigError(path + ": x column is not uniformly spaced");
    }
    return Field(Grid(xs.front(), xs.back(), n), std::move(vs));
}

void write_table_csv(const std::string& path, const std::vector<std::string>& headers,
                     const std::vector<std::vector<double>>& columns) {
    if (headers.size() != columns.size())
        throw std::invalid_argument("write_table_csv: header/column count mismatch");
    if (columns.empty()) throw std::invalid_argument("write_table_csv: no columns");
    const size_t rows = columns.front().size();
    for (const auto& c : columns)
        if (c.size() != rows) throw std::invalid_argument("write_table_csv: ragged columns");

    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    for (size_t j = 0; j < headers.size(); ++j)
        out << headers[j] << (j + 1 < headers.size() ? ',' : '\n');
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < columns.size(); ++j)
            out << format_full(columns[j][i]) << (j + 1 < columns.size() ? ',' : '\n');
    if (!out) throw ConfigError("failed while writing " + path);
}

} // namespace nlstefan
