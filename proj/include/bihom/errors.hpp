#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two scalars (or containers of scalars) from different fields were combined.
struct FieldMismatchError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// A presentation lacks a named op/map a checker or construction needs.
struct MissingComponentError : Error {
    using Error::Error;
};

struct KindMismatchError : Error {
    using Error::Error;
};

// A construction was invoked on inputs that fail its hypotheses. The message
// names the broken hypothesis (axiom identifier where one exists).
struct PrerequisiteFailedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct SpaceTooLargeError : Error {
    using Error::Error;
};

struct UnknownCheckerError : Error {
    using Error::Error;
};

struct UnknownIdentityError : Error {
    using Error::Error;
};

}  // namespace bihom
