#pragma once

#include <stdexcept>
#include <string>

namespace cassinian {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible ambient dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// A point coincides (within the boundary guard) with a puncture.
struct OnBoundaryError : Error {
    using Error::Error;
};

/// A scalar argument lies outside the admissible range of the operation.
struct OutOfRangeError : Error {
    using Error::Error;
};

/// Invalid configuration (bad domain, bad run parameters, unsupported combination).
struct ConfigError : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

} // namespace cassinian
