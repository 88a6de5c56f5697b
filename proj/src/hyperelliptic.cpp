#include "g2dual/hyperelliptic.hpp"

namespace g2 {

Genus2Curve::Genus2Curve(XPoly f) : f_(std::move(f)) {
    if (f_.is_zero() || f_.deg() != 6)
        fail(Errc::DegenerateModel, "curve polynomial must have x-degree exactly 6");
    a0_ = f_.leading();
    if (gcd_poly(f_, f_.derivative()).deg() != 0)
        fail(Errc::DegenerateModel, "curve polynomial has a repeated factor (singular generic fiber)");
}

MumfordDivisor empty_divisor() { return MumfordDivisor{XPoly(1), XPoly()}; }

ReducedClass identity_class() { return ReducedClass{empty_divisor()}; }

bool validate_mumford(const Genus2Curve& curve, const XPoly& u, const XPoly& v) {
    if (u.is_zero() || !u.is_monic()) fail(Errc::NonMonicU, "u must be monic and nonzero");
    if (!(v.degree() < u.degree())) return false;
    return ((v * v - curve.f()) % u).is_zero();
}

bool is_semi_reduced(const Genus2Curve& curve, const XPoly& u, const XPoly& v) {
    if (u.is_zero() || !u.is_monic()) fail(Errc::NonMonicU, "u must be monic and nonzero");
    if (!(v.degree() < u.degree())) fail(Errc::InvalidMumford, "deg v must be below deg u");
    // repeated part of u; a repeated root may not be a Weierstrass point,
    // and v vanishes exactly at the Weierstrass roots of u
    XPoly rep = exact_div(u, squarefree_part(u));
    if (rep.deg() > 0) {
        if (v.is_zero()) return false;
        if (gcd_poly(rep, v).deg() != 0) return false;
    }
    if (!((v * v - curve.f()) % u).is_zero())
        fail(Errc::InvalidMumford, "u does not divide v^2 - f");
    return true;
}

namespace {

// shared degree-lowering step: u1 = monic((f - v^2)/u), v1 = -v mod u1
MumfordDivisor reduction_step(const Genus2Curve& curve, const MumfordDivisor& d) {
    if (d.v.degree() == 3 && d.v.leading() * d.v.leading() == curve.a0())
        fail(Errc::InfinityLeadingTerm,
             "lt(v) matches a branch at infinity; balanced representatives are unsupported");
    auto [q, r] = divmod(curve.f() - d.v * d.v, d.u);
    if (!r.is_zero()) fail(Errc::NonExactDivision, "u does not divide f - v^2");
    if (q.is_zero()) fail(Errc::Internal, "degenerate reduction quotient");
    XPoly u1 = make_monic(q);
    XPoly v1 = (-d.v) % u1;
    return MumfordDivisor{std::move(u1), std::move(v1)};
}

} // namespace

MumfordDivisor reduce_deg4(const Genus2Curve& curve, const MumfordDivisor& d0) {
    if (!(d0.u.degree() == 4)) fail(Errc::InvalidInput, "reduce_deg4 requires deg u = 4");
    MumfordDivisor d1 = reduction_step(curve, d0);
    if (!(d1.u.degree() == 2)) fail(Errc::Internal, "reduction did not reach degree 2");
    if (!validate_mumford(curve, d1.u, d1.v)) fail(Errc::Internal, "reduction output invalid");
    return d1;
}

MumfordDivisor involution(const MumfordDivisor& d) {
    if (d.u.is_zero() || !d.u.is_monic()) fail(Errc::NonMonicU, "u must be monic and nonzero");
    return MumfordDivisor{d.u, (-d.v) % d.u};
}

MumfordDivisor cantor_compose(const Genus2Curve& curve, const MumfordDivisor& d1,
                              const MumfordDivisor& d2) {
    if (!validate_mumford(curve, d1.u, d1.v) || !is_semi_reduced(curve, d1))
        fail(Errc::InvalidInput, "first divisor is not semi-reduced");
    if (!validate_mumford(curve, d2.u, d2.v) || !is_semi_reduced(curve, d2))
        fail(Errc::InvalidInput, "second divisor is not semi-reduced");

    auto [g1, e1, e2] = ext_gcd(d1.u, d2.u);
    XPoly vsum = d1.v + d2.v;
    XPoly d, s1, s2, s3;
    if (vsum.is_zero()) {
        d = std::move(g1);
        s1 = std::move(e1);
        s2 = std::move(e2);
    } else {
        auto [g2, c1, c2] = ext_gcd(g1, vsum);
        d = std::move(g2);
        s1 = c1 * e1;
        s2 = c1 * e2;
        s3 = std::move(c2);
    }

    XPoly u3 = exact_div(d1.u * d2.u, d * d);
    XPoly num = s1 * d1.u * d2.v + s2 * d2.u * d1.v + s3 * (d1.v * d2.v + curve.f());
    XPoly v3 = exact_div(num, d) % u3;
    MumfordDivisor out{std::move(u3), std::move(v3)};
    if (!validate_mumford(curve, out.u, out.v)) fail(Errc::Internal, "composition output invalid");
    return out;
}

ReducedClass reduce_general(const Genus2Curve& curve, const MumfordDivisor& d) {
    if (!validate_mumford(curve, d.u, d.v) || !is_semi_reduced(curve, d))
        fail(Errc::InvalidInput, "input divisor is not semi-reduced");
    if (d.u.deg() % 2 != 0)
        fail(Errc::UnsupportedOddDegree, "odd-degree divisors need infinity-balanced representatives");
    MumfordDivisor cur = d;
    while (cur.u.deg() > 2) cur = reduction_step(curve, cur);
    if (cur.u.deg() == 0) return identity_class();
    return ReducedClass{std::move(cur)};
}

ReducedClass class_add(const Genus2Curve& curve, const ReducedClass& a, const ReducedClass& b) {
    return reduce_general(curve, cantor_compose(curve, a.rep, b.rep));
}

ReducedClass class_negate(const ReducedClass& a) { return ReducedClass{involution(a.rep)}; }

bool class_order_is_three(const Genus2Curve& curve, const ReducedClass& xi) {
    if (xi.is_identity()) return false;
    return class_add(curve, xi, class_add(curve, xi, xi)).is_identity();
}

} // namespace g2
