#pragma once

#include <map>
#include <string>

#include "nlstefan/presets.hpp"

namespace nlstefan {

using KeyValues = std::map<std::string, std::string>;

/// Parses a flat `key = value` file; '#' starts a comment, blank lines are
/// skipped. Raises ConfigError on malformed lines.
KeyValues parse_config_file(const std::string& path);

KeyValues parse_config_text(const std::string& text);

/// Builds an ExperimentConfig from parsed keys: `initial.preset` (or
/// `initial.csv`) selects the base, the remaining keys override it.
/// Unknown keys are rejected.
ExperimentConfig build_config(const KeyValues& kv);

} // namespace nlstefan
