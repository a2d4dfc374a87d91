#pragma once

#include <stdexcept>
#include <string>

namespace nehari {

/// Malformed construction input: bad extents, exponent ranges, size mismatches.
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation needing u^{-gamma} was given a field below the positivity floor.
struct SingularityGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The ray through the requested direction does not meet the Nehari set
/// (lambda at or above the direction's critical value).
struct NoIntersectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every solver restart failed to project onto the manifold.
struct InfeasibleRayError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nehari
