#pragma once

#include <stdexcept>
#include <string>

namespace qht {

// Base class for all recoverable errors raised by this library.
// The CLI maps these to exit code 1; anything else is an internal error (2).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Register/vector size outside the supported range (e.g. non-power-of-two).
struct size_error : error {
    using error::error;
};

// Qubit index outside the state it is applied to.
struct index_error : error {
    using error::error;
};

// Inconsistent or invalid call arguments (dimension mismatch, duplicates, ...).
struct argument_error : error {
    using error::error;
};

// Value outside its mathematical domain (component not in [-1,1], non-unit norm).
struct domain_error : error {
    using error::error;
};

// Bad dataset content (unknown class, constant feature, non-binary label, ...).
struct data_error : error {
    using error::error;
};

// Malformed input file.
struct parse_error : error {
    using error::error;
};

// Class counts unequal where a balanced training set is required.
struct balance_error : error {
    using error::error;
};

// Invalid experiment configuration; message carries the offending field path.
struct validation_error : error {
    using error::error;
};

} // namespace qht
