#pragma once

#include <vector>

#include "g2dual/fraction.hpp"
#include "g2dual/poly.hpp"
#include "g2dual/quad_scalar.hpp"

namespace g2 {

// The field tower of the pipeline:
//   QuadScalar = Q(sqrt d)          (exact scalars)
//   TPoly      = Q(sqrt d)[t]
//   RatFunc    = Q(sqrt d)(t)       (base field K)
//   XPoly      = K[x]               (curves, Mumford u and v)
//   XRat       = K(x)
//   UPoly      = K(x)[u]            (the tangency cubic)
using TPoly = Poly<QuadScalar>;
using RatFunc = Fraction<TPoly>;
using XPoly = Poly<RatFunc>;
using XRat = Fraction<XPoly>;
using UPoly = Poly<XRat>;

inline TPoly t_poly() { return TPoly::variable(); }
inline XPoly x_poly() { return XPoly::variable(); }

inline RatFunc rf(TPoly p) { return RatFunc(std::move(p)); }
inline RatFunc rf_t() { return rf(t_poly()); }

// constant-in-x embedding of a t-polynomial / rational function
inline XPoly xconst(RatFunc c) { return XPoly(std::move(c)); }
inline XPoly xconst(TPoly c) { return XPoly(rf(std::move(c))); }
inline XPoly xconst(QuadScalar c) { return XPoly(rf(TPoly(std::move(c)))); }

inline bool has_polynomial_coeffs(const XPoly& p) {
    for (const auto& c : p.coeffs())
        if (!c.is_polynomial()) return false;
    return true;
}

// x-coefficients as t-polynomials; requires denominator-free input.
inline std::vector<TPoly> tpoly_coeffs(const XPoly& p) {
    std::vector<TPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (!c.is_polynomial())
            fail(Errc::InvalidInput, "polynomial in t and x expected, found a true denominator");
        out.push_back(c.num());
    }
    return out;
}

inline XPoly xpoly_from_tcoeffs(std::vector<TPoly> coeffs) {
    std::vector<RatFunc> cs;
    cs.reserve(coeffs.size());
    for (auto& c : coeffs) cs.emplace_back(std::move(c));
    return XPoly(std::move(cs));
}

inline XPoly d_dx(const XPoly& p) { return p.derivative(); }

inline XPoly d_dt(const XPoly& p) {
    std::vector<RatFunc> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c.derivative());
    return XPoly(std::move(cs));
}

// Specialization t = t0: maps K[x] -> Q(sqrt d)[x]; every coefficient
// denominator must be nonzero at t0.
inline Poly<QuadScalar> specialize_t(const XPoly& p, const QuadScalar& t0) {
    std::vector<QuadScalar> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c.eval(t0));
    return Poly<QuadScalar>(std::move(cs));
}

// lcm of the coefficient denominators of u (monic).
inline TPoly denominator_lcm(const XPoly& p) {
    TPoly acc(1);
    for (const auto& c : p.coeffs()) {
        if (c.is_polynomial()) continue;
        TPoly g = gcd_poly(acc, c.den());
        acc = acc * exact_div(c.den(), g);
    }
    return acc;
}

inline TPoly lcm_poly(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) fail(Errc::ZeroInput, "lcm with zero polynomial");
    return make_monic(a * exact_div(b, gcd_poly(a, b)));
}

} // namespace g2
