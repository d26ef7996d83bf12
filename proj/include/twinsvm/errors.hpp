#pragma once

#include <stdexcept>
#include <string>

namespace twinsvm {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File-level structure is wrong (missing markers, inconsistent row widths).
struct FormatError : Error {
    using Error::Error;
};

// A cell or token could not be parsed; the message carries row/column.
struct ParseError : Error {
    using Error::Error;
};

// The file is well-formed but not a binary classification dataset.
struct UnsupportedDatasetError : Error {
    using Error::Error;
};

// A required class is empty (or otherwise unusable for training).
struct DegenerateDatasetError : Error {
    using Error::Error;
};

// A class has fewer samples than the requested fold count.
struct StratificationError : Error {
    using Error::Error;
};

// Matrix/vector dimensions do not line up.
struct ShapeError : Error {
    using Error::Error;
};

// A factorization failed or a solve could not reach its residual bound.
struct NumericalError : Error {
    using Error::Error;
};

// An argument violates a documented precondition (non-positive penalty,
// negative weight, out-of-range constant, ...).
struct ContractError : Error {
    using Error::Error;
};

// The requested metric is undefined for the given input (e.g. AUC when the
// truth vector contains a single class).
struct UndefinedMetricError : Error {
    using Error::Error;
};

// File could not be opened, read, or written.
struct IoError : Error {
    using Error::Error;
};

// Experiment configuration is invalid.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace twinsvm
