#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "g2dual/algebra.hpp"

namespace g2 {

// Sparse trivariate polynomial in (T, X, Z) over Q(sqrt d).  Degrees in this
// pipeline stay at or below 12 (cubes of the quartic G), so a monomial map is
// plenty.
class TriPoly {
public:
    using Exponents = std::array<int, 3>; // (T, X, Z)

    TriPoly() = default;

    static TriPoly monomial(QuadScalar c, int i, int j, int k);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, QuadScalar>& terms() const { return terms_; }
    QuadScalar coeff(int i, int j, int k) const;

    // largest i+j+k over the support; nullopt for the zero polynomial
    std::optional<int> total_degree() const;
    bool is_homogeneous() const;

    TriPoly operator-() const;
    TriPoly& operator+=(const TriPoly& o);
    TriPoly& operator-=(const TriPoly& o);
    friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
    TriPoly& operator*=(const TriPoly& o) { return *this = *this * o; }
    TriPoly& operator*=(const QuadScalar& s);
    friend TriPoly operator*(TriPoly a, const QuadScalar& s) { return a *= s; }
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const TriPoly& a, const TriPoly& b) { return !(a == b); }

    TriPoly pow(unsigned e) const;

    QuadScalar eval(const QuadScalar& T, const QuadScalar& X, const QuadScalar& Z) const;

    TriPoly partial(int var) const; // 0 = T, 1 = X, 2 = Z

    // restriction to the parametrized line P + s*Q, as a polynomial in s
    Poly<QuadScalar> restrict_line(const std::array<QuadScalar, 3>& P,
                                   const std::array<QuadScalar, 3>& Q) const;

    // substitution (T, X, Z) = (T, 1, 0): the binary form on the line Z = 0
    // away from [1,0,0], as a polynomial in T
    Poly<QuadScalar> on_infinity_line() const;

    // degree-n homogenization of a polynomial in (t, x); requires
    // denominator-free coefficients and total degree <= n
    static TriPoly homogenize(const XPoly& p, int n);

    // Z = 1
    XPoly dehomogenize() const;

private:
    void add_term(const Exponents& e, const QuadScalar& c);

    std::map<Exponents, QuadScalar> terms_;
};

} // namespace g2
