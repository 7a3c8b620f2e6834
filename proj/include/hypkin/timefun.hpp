#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hypkin/errors.hpp"

namespace hypkin {

/// Immutable scalar function of the time variable t.
///
/// Grammar: real literals, t, binary + - * /, unary -, integer powers via ^,
/// and the functions sin, cos, sinh, cosh, exp.  Precedence ^ > unary - >
/// * / > + -, with left associativity; parentheses group.  The grammar is
/// closed under differentiation, so derivatives of any order stay exact.
class TimeExpr {
  public:
    /// Zero constant; lets TimeExpr live in containers before assignment.
    TimeExpr();

    /// Throws ParseError (with byte offset) on malformed input, including
    /// unknown identifiers and non-integer exponents.
    static TimeExpr parse(std::string_view text);

    static TimeExpr constant(double value);
    static TimeExpr time();

    /// Value at t.  Throws Error(Eval) on division by zero.
    double eval(double t) const;

    /// Exact symbolic derivative; may be applied repeatedly.
    TimeExpr differentiate() const;

    /// Canonical text form; parse(str()) reproduces the tree exactly.
    std::string str() const;

    /// Structural equality (after the constant folding both sides get).
    friend bool operator==(const TimeExpr& a, const TimeExpr& b);

    friend TimeExpr operator+(const TimeExpr& a, const TimeExpr& b);
    friend TimeExpr operator-(const TimeExpr& a, const TimeExpr& b);
    friend TimeExpr operator*(const TimeExpr& a, const TimeExpr& b);
    friend TimeExpr operator/(const TimeExpr& a, const TimeExpr& b);
    friend TimeExpr operator-(const TimeExpr& a);
    friend TimeExpr pow_i(const TimeExpr& base, int exponent);
    friend TimeExpr sin(const TimeExpr& e);
    friend TimeExpr cos(const TimeExpr& e);
    friend TimeExpr sinh(const TimeExpr& e);
    friend TimeExpr cosh(const TimeExpr& e);
    friend TimeExpr exp(const TimeExpr& e);

    struct Node; // defined in timefun.cpp; opaque to users

  private:
    using NodePtr = std::shared_ptr<const Node>;

    explicit TimeExpr(NodePtr node) : node_(std::move(node)) {}

    NodePtr node_;
};

} // namespace hypkin
