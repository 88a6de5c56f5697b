#pragma once

#include <utility>

#include "g2dual/algebra.hpp"

namespace g2 {

// Genus-2 curve y^2 = f(x) in the even-degree model: deg_x f = 6, f squarefree
// over K = Q(sqrt d)(t).  The two points at infinity are never materialized;
// conditions on their branch values a(+-) = sqrt(a0) are expressed through
// lc(v)^2 = a0 instead.
class Genus2Curve {
public:
    explicit Genus2Curve(XPoly f);

    const XPoly& f() const { return f_; }
    const RatFunc& a0() const { return a0_; }

private:
    XPoly f_;
    RatFunc a0_;
};

// Mumford pair (u, v): u monic, deg v < deg u, u | v^2 - f.  Encodes the
// effective affine semi-reduced divisor div[u, v] of degree deg u.
struct MumfordDivisor {
    XPoly u;
    XPoly v;

    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }
};

// the empty divisor (u, v) = (1, 0)
MumfordDivisor empty_divisor();

// true iff deg v < deg u and u | v^2 - f; u must be monic (NonMonicU).
bool validate_mumford(const Genus2Curve& curve, const XPoly& u, const XPoly& v);

// Semi-reduced test: no repeated Weierstrass point, i.e.
// gcd(u / squarefree_part(u), v) = 1.  The multiplicity criterion is checked
// first and a failing pair reports false; pairs passing it must satisfy the
// Mumford divisibility (InvalidMumford otherwise).
bool is_semi_reduced(const Genus2Curve& curve, const XPoly& u, const XPoly& v);
inline bool is_semi_reduced(const Genus2Curve& curve, const MumfordDivisor& d) {
    return is_semi_reduced(curve, d.u, d.v);
}

// One reduction step for deg u0 = 4 (Algorithm "Reduction"):
//   u1 = monic((f - v0^2)/u0),  v1 = -v0 mod u1.
// Rejects lt(v0) = a(+-) x^3, tested as deg v0 = 3 and lc(v0)^2 = a0
// (InfinityLeadingTerm); u0 must divide f - v0^2 (NonExactDivision).
MumfordDivisor reduce_deg4(const Genus2Curve& curve, const MumfordDivisor& d0);

// hyperelliptic involution on divisors: (u, (-v) mod u)
MumfordDivisor involution(const MumfordDivisor& d);

// Cantor composition of two semi-reduced divisors (InvalidInput otherwise):
//   d = gcd(u1, u2, v1+v2) = s1 u1 + s2 u2 + s3 (v1+v2)
//   u3 = u1 u2 / d^2
//   v3 = (s1 u1 v2 + s2 u2 v1 + s3 (v1 v2 + f)) / d  mod u3
MumfordDivisor cantor_compose(const Genus2Curve& curve, const MumfordDivisor& d1,
                              const MumfordDivisor& d2);

// Canonical class representative: deg u <= 2, the class of
// div[u,v] - (deg u / 2) * (inf+ + inf-); unique by the reduced-representative
// theorem within the affine-representable regime.
struct ReducedClass {
    MumfordDivisor rep;

    bool is_identity() const { return rep.u.is_one() && rep.v.is_zero(); }

    friend bool operator==(const ReducedClass& a, const ReducedClass& b) { return a.rep == b.rep; }
    friend bool operator!=(const ReducedClass& a, const ReducedClass& b) { return !(a == b); }
};

ReducedClass identity_class();

// Repeated reduction until deg u <= 2.  Only even-degree inputs are supported
// (UnsupportedOddDegree); representatives that would need the points at
// infinity are rejected loudly (InfinityLeadingTerm).
ReducedClass reduce_general(const Genus2Curve& curve, const MumfordDivisor& d);

ReducedClass class_add(const Genus2Curve& curve, const ReducedClass& a, const ReducedClass& b);

ReducedClass class_negate(const ReducedClass& a);

// true iff xi is not the identity and xi + xi + xi is
bool class_order_is_three(const Genus2Curve& curve, const ReducedClass& xi);

} // namespace g2
