#pragma once

#include <string>
#include <vector>

#include "nlstefan/grid.hpp"

namespace nlstefan {

/// Writes an SVG line plot (one polyline per field, shared grid, simple
/// axes) plus a matching CSV next to it; the CSV is the authoritative
/// record immune to rendering choices. Labels default to "y0", "y1", ...
void render_plot(const std::vector<Field>& fields, const std::string& svg_path,
                 const std::vector<std::string>& labels = {});

} // namespace nlstefan
