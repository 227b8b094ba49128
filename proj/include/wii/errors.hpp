#pragma once

#include <stdexcept>

namespace wii {

// File-level failures carry distinct types so callers can tell a missing
// or unreadable file from a corrupt one.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad magic, unsupported version, or inconsistent field values.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File ends before the declared payload does.
struct TruncatedFileError : FormatError {
    using FormatError::FormatError;
};

// Input on which the requested operation is mathematically undefined
// (all-zero stream, flat spectrum, ...).
struct DegenerateInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Tensor or layer dimension mismatch.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Non-finite values encountered during optimisation.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace wii
