#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypkin {

enum class ErrorKind {
    NonFinite,          // NaN/inf component rejected by a constructor
    ZeroInput,          // polar form requested for zero
    IsotropicInput,     // polar form / division on a null direction
    Parse,              // malformed expression text
    Eval,               // division by zero while evaluating an expression
    DegenerateMotion,   // a rotation rate vanishes at the queried instant
    NoPole,             // relative rotation rate vanishes, no pole point
    IsotropicTangent,   // pole-curve velocity is null, no polar angle
    IsotropicDirection, // conjugate-point query along a null direction
    NoConjugate,        // curvature center at infinity
    NullVelocity,       // curve velocity is null at the queried instant
    StraightCurve,      // osculating center at infinity
    IsotropicSegment,   // curve speed vanishes somewhere on the interval
    InvalidDocument,    // malformed motion document
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Expression-text error carrying the byte offset of the offending token.
class ParseError : public Error {
  public:
    ParseError(std::size_t offset, const std::string& message)
        : Error(ErrorKind::Parse,
                message + " (byte " + std::to_string(offset) + ")"),
          offset_(offset), detail_(message) {}

    std::size_t offset() const noexcept { return offset_; }

    /// The message without the byte-offset suffix, for rewrapping.
    const std::string& detail() const noexcept { return detail_; }

  private:
    std::size_t offset_;
    std::string detail_;
};

} // namespace hypkin
