#pragma once

#include <stdexcept>
#include <string>

namespace epp {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A partition pair was passed to an edge operation but is not a covering pair.
struct NotCovering : Error {
    using Error::Error;
};

/// Series composition requires the inner series to have zero constant term.
struct NonzeroConstantTerm : Error {
    using Error::Error;
};

/// Compositional or multiplicative inverse does not exist at this truncation.
struct NotInvertible : Error {
    using Error::Error;
};

/// Coefficient extraction past the valid truncation order of a series.
struct OrderExceeded : Error {
    using Error::Error;
};

/// Two independently computed sides of an identity disagree; signals a bug.
struct IdentityViolation : Error {
    using Error::Error;
};

/// Interpolation-based construction invoked with alpha = 0 (nodes collapse).
struct AlphaZero : Error {
    using Error::Error;
};

/// Parameters outside 0 <= alpha < 1, theta > -alpha.
struct ParamRange : Error {
    using Error::Error;
};

/// Moment order vector exceeds the available sample size.
struct OrderTooLarge : Error {
    using Error::Error;
};

/// Brute-force enumeration requested beyond the configured bound.
struct OracleBoundExceeded : Error {
    using Error::Error;
};

/// Malformed textual input (rationals, partitions, series names).
struct ParseError : Error {
    using Error::Error;
};

} // namespace epp
