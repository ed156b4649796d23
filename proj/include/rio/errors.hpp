#pragma once

#include <stdexcept>

namespace rio {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input sizes do not match the code parameters (n, k, K).
struct DimensionMismatch : Error {
    using Error::Error;
};

// No monotone, decode-consistent successor state exists for the requested
// write. Signals an invalid code or an unreachable prior state.
struct NoValidSuccessor : Error {
    using Error::Error;
};

// Exhaustive verification was refused because 2^(k*t) is too large.
struct EnumerationTooLarge : Error {
    using Error::Error;
};

// Synthesis parameters outside the supported search guards.
struct SearchSpaceTooLarge : Error {
    using Error::Error;
};

struct ThresholdOutOfRange : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct AlreadyProgrammed : Error {
    using Error::Error;
};

struct NotProgrammed : Error {
    using Error::Error;
};

// Level count not supported by the requested read-cost scheme.
struct UnsupportedM : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of the function.
struct DomainError : Error {
    using Error::Error;
};

// No programming-fraction sequence exists for the requested rate.
struct Infeasible : Error {
    using Error::Error;
};

// Malformed code-spec, level-word, payload, or workload input.
struct FormatError : Error {
    using Error::Error;
};

// Filesystem read/write failure.
struct IoError : Error {
    using Error::Error;
};

} // namespace rio
