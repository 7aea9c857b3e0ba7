#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A query point lies outside the instance universe.
struct DomainError : Error {
    using Error::Error;
};

// Malformed input object (schedule/instance domain mismatch, bad ids, ...).
// Distinct from a schedule that is merely invalid at a claimed duration.
struct StructuralError : Error {
    using Error::Error;
};

// A configurable work or size bound was exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

// A randomized algorithm exhausted its retry budget.
struct ProbabilisticFailureError : Error {
    using Error::Error;
};

// Serialization / document errors.
struct ParseError : Error {
    using Error::Error;
};

// An internal invariant that should hold by construction failed.
struct InvariantError : Error {
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

} // namespace rsc
