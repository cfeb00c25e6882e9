#pragma once

#include <stdexcept>
#include <string>

namespace abelgrowth {

// Base of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally invalid input: malformed torsion table, dimension mismatch,
// out-of-range parameter, a "symmetric" set that is not closed under inverses.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A candidate generating set was rejected, either because it provably
// generates a proper subgroup/submonoid or because a required certificate
// could not be found within the search budget.
class GenerationError : public Error {
public:
    using Error::Error;
};

// A computation hit a hard resource limit: coordinate overflow or the
// memory budget. radius_reached() reports the last fully completed BFS
// radius, or -1 when the failure happened before any layer finished.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what, int radius_reached = -1)
        : Error(what), radius_reached_(radius_reached) {}

    int radius_reached() const noexcept { return radius_reached_; }

private:
    int radius_reached_;
};

// A document could not be parsed or fails schema checks.
class IngestError : public Error {
public:
    using Error::Error;
};

// A result contradicts an exact invariant that should always hold
// (for example the parity law for symmetric sets). Indicates a bug
// somewhere, so it gets its own type rather than a generic failure.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace abelgrowth
