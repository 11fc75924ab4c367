#pragma once

#include <string>
#include <vector>

#include "nlstefan/grid.hpp"

namespace nlstefan {

/// Writes a field as `x,value` rows at 17 significant digits, so a
/// write/read round trip is bit-identical.
void write_field_csv(const std::string& path, const Field& field);

/// Reads a `x,value` CSV back into a Field; the grid is inferred from the
/// x column, which must be uniformly spaced.
Field read_field_csv(const std::string& path);

/// Writes a table of equally long columns under the given header names.
void write_table_csv(const std::string& path, const std::vector<std::string>& headers,
                     const std::vector<std::vector<double>>& columns);

std::string format_full(double v); ///< %.17g

} // namespace nlstefan
