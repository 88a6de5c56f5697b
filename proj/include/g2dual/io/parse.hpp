#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "g2dual/algebra.hpp"

namespace g2::io {

// AST for polynomial expressions over the grammar
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' INT)?
//   atom   := INT ('/' INT)? | VAR | '(' expr ')'
// with variables drawn from {t, x, s} (s^2 = d).  Exponents are nonnegative
// integer literals; '/' occurs only inside rational literals.
struct PolyExpr {
    enum class Kind { Literal, Variable, Neg, Add, Sub, Mul, Pow };

    Kind kind;
    Rational literal;                     // Literal
    char var = 0;                         // Variable
    std::unique_ptr<PolyExpr> lhs, rhs;   // Neg (lhs), Add/Sub/Mul
    unsigned exponent = 0;                // Pow (base in lhs)
};

// Parses text into an AST; error positions are 1-based columns.
// Errors: SyntaxError, UnknownVariable, NegativeExponent.
PolyExpr parse_poly(const std::string& text, const std::set<char>& allowed_vars);

// Evaluation into the x-polynomial ring over Q(sqrt(disc))(t).
XPoly eval_xpoly(const PolyExpr& expr, long disc);

// Evaluation into Q(sqrt(disc))[t]; rejects expressions mentioning x.
TPoly eval_tpoly(const PolyExpr& expr, long disc);

// convenience: parse + evaluate
XPoly parse_xpoly(const std::string& text, long disc);
TPoly parse_tpoly(const std::string& text, long disc);
Rational parse_rational(const std::string& text);

} // namespace g2::io
