#pragma once

#include <string>

#include "g2dual/algebra.hpp"
#include "g2dual/trivariate.hpp"

namespace g2::io {

// Canonical compact rendering: terms in decreasing x-degree, then decreasing
// t-degree, signs pulled into the joiners, the radical printed as `s`.
// Equal values always print identically, so the strings are diff-stable.
std::string to_string(const Rational& r);
std::string to_string(const QuadScalar& c);
std::string to_string(const TPoly& p, const std::string& var = "t");
std::string to_string(const RatFunc& r, const std::string& var = "t");
std::string to_string(const XPoly& p, const std::string& xvar = "x",
                      const std::string& tvar = "t");
std::string to_string(const TriPoly& p);

} // namespace g2::io
