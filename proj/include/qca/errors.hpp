#pragma once

#include <stdexcept>
#include <string>

namespace qca {

/// Bad input data: malformed files, dimension mismatches, frozen-direction
/// mutation requests, unknown builtin names.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (B, L) fails the compatibility condition; the message names the entry.
struct incompatibility_error : validation_error {
    using validation_error::validation_error;
};

/// Exact division left a remainder (a Laurent-phenomenon violation if it
/// happens on a mutation path).
struct division_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A degree bound, completion budget or enumeration vertex bound was hit.
struct bound_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Internal consistency check failed (engine bug).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qca
