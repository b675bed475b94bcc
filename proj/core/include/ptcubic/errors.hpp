#pragma once

#include <stdexcept>
#include <string>

namespace ptcubic {

// Base class for all library errors.  Every error carries a short
// machine-readable code (stable across releases) plus the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed user input: unparsable rational, bad precision, bad order.
class InputError : public Error {
public:
    InputError(const std::string& message) : Error("input", message) {}
};

// Cache file failed validation (bad header, gap, non-integer, mismatch).
class CacheError : public Error {
public:
    CacheError(const std::string& message) : Error("cache", message) {}
};

// A configurable resource ceiling (order, memory) would be exceeded.
class ResourceError : public Error {
public:
    ResourceError(const std::string& message) : Error("resource", message) {}
};

// Padé construction impossible (singular system after exact elimination).
class PadeError : public Error {
public:
    PadeError(const std::string& message) : Error("pade", message) {}
};

// Quadrature failed to converge to the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& message) : Error("quadrature", message) {}
};

// Eigenvalue search failed (secant divergence, iteration cap, NaN).
class SolverError : public Error {
public:
    SolverError(const std::string& message) : Error("solver", message) {}
};

} // namespace ptcubic
