#pragma once

#include <stdexcept>
#include <string>

namespace trim {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or broken domain-type invariant (non-finite value,
/// non-positive mass, malformed table, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Direction of a zero vector was requested.
struct ZeroVectorError : Error {
    using Error::Error;
};

/// An aerodynamic coefficient evaluated to a non-finite value.
struct ModelEvaluationError : Error {
    using Error::Error;
};

/// Table coverage does not match what an operation requires.
struct RangeError : Error {
    using Error::Error;
};

/// A declared symmetry class failed its numerical verification.
struct SymmetryVerificationError : Error {
    using Error::Error;
};

/// Drag ordering c_D(pi) > c_D(0) required but not satisfied.
struct CdOrderingError : Error {
    using Error::Error;
};

/// An operation precondition does not hold for the given inputs.
struct PreconditionError : Error {
    using Error::Error;
};

/// Scenario/config file problem (missing file, bad key, ...).
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed input stream; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace trim
