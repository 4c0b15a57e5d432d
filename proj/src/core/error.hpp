#pragma once

#include <stdexcept>
#include <string>

namespace hhc {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or schema-violating input (JSON, flags, file contents).
struct ParseError : Error {
    using Error::Error;
};

// Geometrically degenerate input: zero volume, collinear shadow, empty slice.
struct DegenerateError : Error {
    using Error::Error;
};

// A precondition on a numeric argument was violated (|m| > m0, alpha < 1, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

// Operation not defined for this input class (e.g. oblique sections of
// rotationally symmetric bodies with n >= 3).
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace hhc
