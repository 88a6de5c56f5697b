#include "g2dual/dual_torus.hpp"

namespace g2 {

namespace {

XRat xrat(XPoly p) { return XRat(std::move(p)); }

QuadScalar q(long num, long den = 1) { return QuadScalar(Rational(num, den)); }

// c * t^i x^j as an XPoly term
XPoly txterm(QuadScalar c, int i, int j) {
    return XPoly::monomial(rf(TPoly::monomial(std::move(c), i)), j);
}

} // namespace

EllipticParams::EllipticParams(Rational a_in, Rational b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
    Rational disc = Rational(4) * a * a * a + Rational(27) * b * b;
    if (disc.is_zero()) fail(Errc::SingularCubic, "4a^3 + 27b^2 = 0: the cubic is singular");
}

UPoly tangency_cubic(const EllipticParams& params) {
    const QuadScalar a(params.a);
    const QuadScalar b(params.b);
    // u^3 - x^2 u^2 - (2tx - a) u + (b - t^2)
    XPoly c2 = -XPoly::monomial(RatFunc(1), 2);
    XPoly c1 = -(txterm(q(2), 1, 1) - xconst(a));
    XPoly c0 = xconst(b) - txterm(q(1), 2, 0);
    return UPoly(std::vector<XRat>{xrat(c0), xrat(c1), xrat(c2), xrat(XPoly(1))});
}

XPoly discriminant_de(const EllipticParams& params) {
    UPoly p = tangency_cubic(params);
    XRat disc = discriminant(p);
    if (!disc.is_polynomial())
        fail(Errc::Internal, "dual-curve discriminant is not polynomial in x");
    return disc.num();
}

std::pair<XPoly, XPoly> gh_decompose(const EllipticParams& params) {
    const QuadScalar a(params.a);
    const QuadScalar b(params.b);
    XPoly g = -XPoly::monomial(rf(TPoly(q(1, 3))), 4) - txterm(q(2), 1, 1) + xconst(a);
    XPoly h = -XPoly::monomial(rf(TPoly(q(2, 27))), 6) -
              (txterm(q(2), 1, 1) - xconst(a)) * XPoly::monomial(rf(TPoly(q(1, 3))), 2) -
              txterm(q(1), 2, 0) + xconst(b);
    XPoly de = discriminant_de(params);
    XPoly lhs = de;
    XPoly rhs = g.pow(3) * RatFunc(-4) + h * h * RatFunc(-27);
    if (lhs != rhs)
        fail(Errc::IdentityFailure, "D_E != -4g^3 - 27h^2: arithmetic inconsistency");
    return {std::move(g), std::move(h)};
}

TorusCertificate quasi_torus_certificate(const EllipticParams& params) {
    TorusCertificate cert;
    cert.de = discriminant_de(params);
    auto [g, h] = gh_decompose(params);
    cert.g = g;
    cert.h = h;
    cert.f = -cert.de;

    const QuadScalar a(params.a);
    const QuadScalar b(params.b);
    // G = -X^4/3 - 2 T X Z^2 + a Z^4
    cert.big_g = TriPoly::monomial(q(-1, 3), 0, 4, 0) + TriPoly::monomial(q(-2), 1, 1, 2) +
                 TriPoly::monomial(a, 0, 0, 4);
    // H = -(2/27) X^6 - (2/3) T X^3 Z^2 + (a/3) X^2 Z^4 - T^2 Z^4 + b Z^6
    cert.big_h = TriPoly::monomial(q(-2, 27), 0, 6, 0) + TriPoly::monomial(q(-2, 3), 1, 3, 2) +
                 TriPoly::monomial(a * q(1, 3), 0, 2, 4) + TriPoly::monomial(q(-1), 2, 0, 4) +
                 TriPoly::monomial(b, 0, 0, 6);

    TriPoly fb = TriPoly::homogenize(cert.de, 6);
    TriPoly lhs = TriPoly::monomial(q(1), 0, 0, 6) * fb;
    TriPoly rhs = cert.big_g.pow(3) * q(-4) + cert.big_h.pow(2) * q(-27);
    if (lhs != rhs)
        fail(Errc::IdentityFailure, "Z^6 F_B != -4G^3 - 27H^2: arithmetic inconsistency");
    if (cert.big_g.dehomogenize() != cert.g || cert.big_h.dehomogenize() != cert.h)
        fail(Errc::IdentityFailure, "dehomogenization does not recover (g, h)");
    return cert;
}

bool certify_pairwise_coprime(const TriPoly& big_g, const TriPoly& big_h, int max_attempts) {
    const TriPoly z = TriPoly::monomial(QuadScalar(1), 0, 0, 1);
    const TriPoly* pairs[3][2] = {{&big_g, &big_h}, {&big_g, &z}, {&big_h, &z}};
    // A common factor C would meet every projective line; a line whose two
    // restrictions have full degree (no intersection escapes to the s = inf
    // end of the parametrization) and nonzero resultant therefore certifies
    // coprimality.  Lines through a common zero (the cusps lie on G = H = 0)
    // simply force another attempt.
    long salt = 1;
    for (auto& pair : pairs) {
        const int d1 = pair[0]->total_degree().value_or(0);
        const int d2 = pair[1]->total_degree().value_or(0);
        bool certified = false;
        for (int attempt = 0; attempt < max_attempts && !certified; ++attempt, ++salt) {
            std::array<QuadScalar, 3> P = {QuadScalar(1), QuadScalar(salt % 7 - 3),
                                           QuadScalar((salt * 3) % 11 - 5)};
            std::array<QuadScalar, 3> Q = {QuadScalar(salt % 5 - 2), QuadScalar(1),
                                           QuadScalar((salt * 7) % 13 - 6)};
            auto r1 = pair[0]->restrict_line(P, Q);
            auto r2 = pair[1]->restrict_line(P, Q);
            if (r1.is_zero() || r2.is_zero()) continue;
            if (r1.deg() != d1 || r2.deg() != d2) continue;
            if (!resultant(r1, r2).is_zero()) certified = true;
        }
        if (!certified) return false;
    }
    return true;
}

TorsionSeed torsion_seed(const EllipticParams& params, long session_disc) {
    if (session_disc != 3)
        fail(Errc::WrongAmbientRadical,
             "the dual-curve pipeline needs sqrt(27) = 3 sqrt(3); run with discriminant 3");
    if (params.b.is_zero())
        fail(Errc::DegenerateModel,
             "b = 0: the sextic passes through the projection center and the even-degree model "
             "degenerates");
    auto [g, h] = gh_decompose(params);
    XPoly f = -discriminant_de(params);
    Genus2Curve curve(std::move(f));
    XPoly u0 = g * RatFunc(-3);
    if (!u0.is_monic()) fail(Errc::Internal, "u0 = -3g is not monic");
    // sqrt(27) = 3 sqrt(3)
    const RatFunc sqrt27 = rf(TPoly(QuadScalar(Rational(0), Rational(3), 3)));
    XPoly v0 = (h * sqrt27) % u0;
    if (!validate_mumford(curve, u0, v0) || !is_semi_reduced(curve, u0, v0))
        fail(Errc::Internal, "torsion seed is not a semi-reduced Mumford pair");
    return TorsionSeed{std::move(curve), std::move(u0), std::move(v0)};
}

SeedCertification certify_seed_parts(const XPoly& f, const XPoly& g, const XPoly& h,
                                     const XPoly& u0, const XPoly& v0) {
    SeedCertification out;
    XPoly lhs = f - h * h * RatFunc(27);
    out.norm_identity = lhs == g.pow(3) * RatFunc(4);
    out.cube_identity = lhs == u0.pow(3) * RatFunc(TPoly(q(-4, 27)));
    out.congruence = !u0.is_zero() && u0.is_monic() && ((f - v0 * v0) % u0).is_zero();
    return out;
}

SeedCertification torsion_seed_certify(const EllipticParams& params) {
    TorsionSeed seed = torsion_seed(params);
    auto [g, h] = gh_decompose(params);
    return certify_seed_parts(seed.curve.f(), g, h, seed.u0, seed.v0);
}

namespace {

// F, dF/dx, dF/dt of the affine sextic as t-polynomial coefficient tables
std::vector<std::vector<TPoly>> singularity_system(const XPoly& de) {
    return {tpoly_coeffs(de), tpoly_coeffs(d_dx(de)), tpoly_coeffs(d_dt(de))};
}

} // namespace

CuspReport cusp_projection(const EllipticParams& params) {
    if (params.b.is_zero())
        fail(Errc::DegenerateModel, "b = 0: the projection center lies on the sextic");
    CuspReport report;
    XPoly de = discriminant_de(params);

    RatFunc r1 = resultant(de, d_dx(de));
    RatFunc r2 = resultant(de, d_dt(de));
    if (!r1.is_polynomial() || !r2.is_polynomial())
        fail(Errc::Internal, "projection resultants are not polynomial");
    if (r1.is_zero() || r2.is_zero())
        fail(Errc::Internal, "projection resultant vanished identically");
    TPoly raw = gcd_poly(r1.num(), r2.num());
    report.multiplicity = squarefree_decomposition(raw);
    report.projection = raw.deg() == 0 ? TPoly(1) : squarefree_part(raw);

    // singular points on the line Z = 0
    TriPoly fb = TriPoly::homogenize(de, 6);
    TriPoly ft = fb.partial(0), fx = fb.partial(1), fz = fb.partial(2);
    const QuadScalar one(1), zero;
    report.infinity_cusp = fb.eval(one, zero, zero).is_zero() && ft.eval(one, zero, zero).is_zero() &&
                           fx.eval(one, zero, zero).is_zero() && fz.eval(one, zero, zero).is_zero();
    report.infinity_count = report.infinity_cusp ? 1 : 0;
    {
        // points [T, 1, 0]: common roots of the four binary forms
        Poly<QuadScalar> acc;
        bool degenerate = false;
        for (const TriPoly* form : {&fb, &ft, &fx, &fz}) {
            Poly<QuadScalar> b = form->on_infinity_line();
            if (b.is_zero()) continue;
            acc = acc.is_zero() ? b : gcd_poly(acc, b);
        }
        if (acc.is_zero()) degenerate = true;
        if (degenerate) fail(Errc::Internal, "line at infinity contained in the singular locus");
        if (acc.deg() > 0) report.infinity_count += squarefree_part(acc).deg();
    }

    if (report.projection.deg() > 0)
        report.fibers = fiber_singularity_counts(singularity_system(de), report.projection);

    bool fibers_ok = true;
    TPoly witness(1);
    for (const auto& fc : report.fibers) {
        if (fc.distinct >= 2) {
            fibers_ok = false;
            witness = witness * fc.factor;
        }
    }
    report.admissible = fibers_ok && report.infinity_count <= 1;
    if (witness.deg() > 0) report.witness = make_monic(witness);
    return report;
}

std::vector<std::pair<TPoly, int>> fiber_cusps_count(const EllipticParams& params,
                                                     const TPoly& modulus) {
    XPoly de = discriminant_de(params);
    auto counts = fiber_singularity_counts(singularity_system(de), modulus);
    std::vector<std::pair<TPoly, int>> out;
    out.reserve(counts.size());
    for (auto& fc : counts) out.emplace_back(std::move(fc.factor), fc.distinct);
    return out;
}

} // namespace g2
