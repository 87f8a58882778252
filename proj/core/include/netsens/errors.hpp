#pragma once

#include <stdexcept>
#include <string>

namespace netsens {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input text could not be parsed (edge lists, mechanism tokens, spec files).
struct ParseError : Error {
    using Error::Error;
};

/// A sampler was asked for more items than the population holds
/// (e.g. adding more edges than there are non-edges).
struct InfeasibleError : Error {
    using Error::Error;
};

/// Sensitivity is undefined: every compared pair is tied.
struct UndefinedSensitivityError : Error {
    using Error::Error;
};

}  // namespace netsens
