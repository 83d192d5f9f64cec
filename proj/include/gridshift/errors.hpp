#pragma once

#include <stdexcept>
#include <string>

namespace gridshift {

// Base class for all library errors. Subtypes map to distinct CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violations on caller-supplied values.
struct InvalidInputError : Error {
    using Error::Error;
};

struct InvalidBandwidthError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct EmptyInputError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct InvalidParameterError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// A structural invariant of the library itself failed (always a bug).
struct InternalInvariantError : Error {
    using Error::Error;
};

// Metric is undefined for the given labeling (e.g. silhouette with one cluster).
struct UndefinedScoreError : Error {
    using Error::Error;
};

// No bandwidth in the sweep produced a scorable clustering.
struct TuningFailureError : Error {
    using Error::Error;
};

// Oracle-scale guard tripped (vanilla mean shift on too many points).
struct SizeCapError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Image decoding failed (unsupported format, corrupt or truncated file).
struct DecodeError : Error {
    using Error::Error;
};

struct InvalidWindowError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

struct SelectionError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// CSV/file parsing problems, carrying a 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, long line = -1)
        : Error(line >= 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_number(line) {}
    long line_number;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace gridshift
