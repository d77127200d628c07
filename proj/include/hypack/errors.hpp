#pragma once

#include <stdexcept>
#include <string>

namespace hypack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition on the mathematical domain violated (y <= 0, epsilon out of
// range, degenerate rectangle, ...).
struct DomainError : Error {
    using Error::Error;
};

// Operands live in different modes (euclidean vs hyperbolic).
struct ModeMismatchError : Error {
    using Error::Error;
};

// Placement outside the supported affine family.
struct UnsupportedPlacementError : Error {
    using Error::Error;
};

// A window is too small to answer the query; carries the radius that would
// suffice.
struct TruncationError : Error {
    double required_radius;
    TruncationError(const std::string& what, double required)
        : Error(what), required_radius(required) {}
};

// Query point outside the window (distinct from a negative answer).
struct OutOfWindowError : Error {
    using Error::Error;
};

// Empty or inconsistent search configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Window not aligned with the requested cell grid.
struct AlignmentError : Error {
    using Error::Error;
};

// A construction that must produce a packing produced an overlap; carries
// the violating pair of placement indices.
struct ConstructionFailure : Error {
    std::size_t first, second;
    ConstructionFailure(const std::string& what, std::size_t i, std::size_t j)
        : Error(what), first(i), second(j) {}
};

}  // namespace hypack
