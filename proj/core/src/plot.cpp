#include "nlstefan/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nlstefan/csv_io.hpp"
#include "nlstefan/errors.hpp"

namespace nlstefan {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string sibling_csv(const std::string& svg_path) {
    const auto dot = svg_path.rfind('.');
    if (dot == std::string::npos) return svg_path + ".csv";
    return svg_path.substr(0, dot) + ".csv";
}

} // namespace

void render_plot(const std::vector<Field>& fields, const std::string& svg_path,
                 const std::vector<std::string>& labels) {
    if (fields.empty()) throw std::invalid_argument("render_plot: no fields");
    for (const auto& f : fields)
        if (f.grid != fields.front().grid)
            throw std::invalid_argument("render_plot: fields must share a grid");

    const Grid& g = fields.front().grid;
    double ymin = 0.0, ymax = 0.0;
    for (const auto& f : fields) {
        ymin = std::min(ymin, f.min());
        ymax = std::max(ymax, f.max());
    }
    if (ymax == ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    const double width = 720, height = 440;
    const double ml = 56, mr = 16, mt = 16, mb = 40; // margins
    const double pw = width - ml - mr, ph = height - mt - mb;
    auto sx = [&](double x) { return ml + (x - g.xmin) / (g.xmax - g.xmin) * pw; };
    auto sy = [&](double y) { return mt + (ymax - y) / (ymax - ymin) * ph; };

    std::ofstream out(svg_path);
    if (!out) throw ConfigError("cannot write " + svg_path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes with a handful of ticks.
    out << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << mt + ph << "\"/>\n</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
    const int ticks = 6;
    for (int i = 0; i <= ticks; ++i) {
        const double x = g.xmin + (g.xmax - g.xmin) * i / ticks;
        const double y = ymin + (ymax - ymin) * i / ticks;
        std::ostringstream xs, ys;
        xs.precision(4);
        ys.precision(4);
        xs << x;
        ys << y;
        out << "<text x=\"" << sx(x) << "\" y=\"" << mt + ph + 16
            << "\" text-anchor=\"middle\">" << xs.str() << "</text>\n";
        out << "<text x=\"" << ml - 6 << "\" y=\"" << sy(y) + 4
            << "\" text-anchor=\"end\">" << ys.str() << "</text>\n";
        out << "<line x1=\"" << sx(x) << "\" y1=\"" << mt + ph << "\" x2=\"" << sx(x)
            << "\" y2=\"" << mt + ph + 4 << "\" stroke=\"#333\"/>\n";
        out << "<line x1=\"" << ml - 4 << "\" y1=\"" << sy(y) << "\" x2=\"" << ml
            << "\" y2=\"" << sy(y) << "\" stroke=\"#333\"/>\n";
    }
    out << "</g>\n";

    for (size_t k = 0; k < fields.size(); ++k) {
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))]
            << "\" stroke-width=\"1.5\" points=\"";
        for (int i = 0; i < g.n; ++i) {
            out << sx(g.node(i)) << ',' << sy(fields[k][i]);
            if (i + 1 < g.n) out << ' ';
        }
        out << "\"/>\n";
    }
    for (size_t k = 0; k < labels.size() && k < fields.size(); ++k) {
        out << "<text font-family=\"sans-serif\" font-size=\"12\" x=\"" << ml + pw - 8
            << "\" y=\"" << mt + 16 + 16 * static_cast<double>(k)
            << "\" text-anchor=\"end\" fill=\""
            << kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))] << "\">" << labels[k]
            << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw ConfigError("failed while writing " + svg_path);

    std::vector<std::string> headers{"x"};
    std::vector<std::vector<double>> cols;
    std::vector<double> xcol(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i) xcol[static_cast<size_t>(i)] = g.node(i);
    cols.push_back(std::move(xcol));
    for (size_t k = 0; k < fields.size(); ++k) {
        headers.push_back(k < labels.size() ? labels[k] : "y" + std::to_string(k));
        cols.push_back(fields[k].values);
    }
    write_table_csv(sibling_csv(svg_path), headers, cols);
}

} // namespace nlstefan
