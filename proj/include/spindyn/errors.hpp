#pragma once

#include <stdexcept>
#include <string>

namespace spindyn {

// Bad experiment description (unparseable config, parameter out of domain).
// CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Request exceeds what this build can compute (e.g. dense diagonalization
// above the site cap). CLI maps this to exit code 3.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem trouble. CLI maps this to exit code 4.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace spindyn
