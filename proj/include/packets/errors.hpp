#pragma once

#include <stdexcept>
#include <string>

namespace packets {

// Shared base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values (mismatched q, index out of range, malformed input).
struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

// A documented mathematical precondition does not hold for the input.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Input fails structural validation (invariant violations reported by name).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// The requested computation is outside the closed-form cases implemented here.
struct UnsupportedCaseError : Error {
    explicit UnsupportedCaseError(const std::string& msg) : Error(msg) {}
};

// An enumeration would exceed the configured size bounds.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

// A value that must be an exact integer failed the rounding gate.
struct NumericalIntegrityError : Error {
    explicit NumericalIntegrityError(const std::string& msg) : Error(msg) {}
};

// "Cannot happen" states; reaching one is a bug, not a user error.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace packets
