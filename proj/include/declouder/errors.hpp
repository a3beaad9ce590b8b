#ifndef DECLOUDER_ERRORS_HPP
#define DECLOUDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace declouder {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values: mismatched dimensions, nonpositive weights, even
// window sizes, degenerate inputs.
class ValueError : public Error {
public:
    explicit ValueError(const std::string& msg) : Error(msg) {}
};

// File and format problems (unreadable file, unsupported format,
// unwritable path).
class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

// Numerical failure inside a solver (zero pivot, non-convergence where the
// caller asked for a hard failure).
class SolverError : public Error {
public:
    explicit SolverError(const std::string& msg) : Error(msg) {}
};

// Invalid run configuration; maps to CLI exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace declouder

#endif
