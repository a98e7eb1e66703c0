#pragma once

#include <stdexcept>
#include <string>

namespace mindist {

// Bad parameters, unsupported field orders, malformed ensemble specs.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input file could not be parsed; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    std::string path;
    int line;
    ParseError(std::string p, int l, const std::string& msg)
        : std::runtime_error(p + ":" + std::to_string(l) + ": " + msg),
          path(std::move(p)),
          line(l) {}
};

// Exhaustive enumeration would exceed the configured budget. Raised instead
// of returning a possibly wrong answer.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural invariant of a code object does not hold (non-commuting
// stabilizer generators, CSS orthogonality failure, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mindist
