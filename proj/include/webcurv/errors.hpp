#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace webcurv {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Inversion of a jet whose constant term vanishes.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

/// Composition argument does not vanish at the origin.
struct NonvanishingArgument : Error {
    using Error::Error;
};

/// Formal map has a singular linear part.
struct SingularJacobian : Error {
    using Error::Error;
};

/// Jet matrix is singular when evaluated at the origin.
struct SingularAtOrigin : Error {
    using Error::Error;
};

/// A verdict was requested beyond the reliable order of the data.
struct OrderExceedsReliable : Error {
    using Error::Error;
};

/// Wedge product would exceed the top degree.
struct DegreeOverflow : Error {
    using Error::Error;
};

/// A 1-form handed to the Poincare primitive is not closed.
struct NotClosed : Error {
    using Error::Error;
};

/// A function expected to be constant on leaves depends on the
/// transversal coordinate.
struct NotBasic : Error {
    using Error::Error;
};

/// First n generators do not form an invertible jet frame.
struct SingularFrame : Error {
    using Error::Error;
};

/// A decomposition coefficient vanishes at the origin.
struct DegeneratePosition : Error {
    using Error::Error;
};

/// The (Q,u,v) data fails general position at the origin.
struct DegenerateTriple : Error {
    using Error::Error;
};

struct DegenerateWeb : Error {
    using Error::Error;
};

/// Vector field vanishes at the origin (no integral curve chart).
struct VanishingAtOrigin : Error {
    using Error::Error;
};

/// An operation requiring a flat web was applied to a non-flat one.
struct NotFlatError : Error {
    using Error::Error;
};

/// Triple does not carry the expected normalized leading terms.
struct NotNormalized : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Consistency check violated; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace webcurv
