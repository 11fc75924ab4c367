#pragma once

#include <stdexcept>
#include <string>

namespace nlstefan {

/// Bad user input: malformed config files, unknown presets, unreadable paths.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure at run time: detected instability, CFL violation,
/// iteration that did not converge, domain too narrow for the data.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nlstefan
