#pragma once

#include <stdexcept>
#include <string>

namespace hint {

// Root of the library's error hierarchy. Subtypes map onto CLI exit codes:
// config/shape/validation -> 2, numerics -> 3, format/io -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct NumericsError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

struct UnsupportedError : Error {
    using Error::Error;
};

struct GenerationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace hint
