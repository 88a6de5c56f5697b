#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "g2dual/hyperelliptic.hpp"
#include "g2dual/quotient.hpp"
#include "g2dual/trivariate.hpp"

namespace g2 {

// Coefficients of E: v^2 = u^3 + a u + b with 4a^3 + 27b^2 != 0.
struct EllipticParams {
    Rational a;
    Rational b;

    EllipticParams(Rational a_in, Rational b_in);
};

// The tangency cubic p(u) = u^3 - x^2 u^2 - (2tx - a) u - t^2 + b: lines
// v = xu + t meet E where p vanishes.
UPoly tangency_cubic(const EllipticParams& params);

// disc_u of the tangency cubic; the dual sextic is D_E(t, x) = 0.
XPoly discriminant_de(const EllipticParams& params);

// g = -x^4/3 - 2tx + a,  h = -(2/27)x^6 - (1/3)(2tx - a)x^2 - t^2 + b,
// with D_E = -4g^3 - 27h^2 verified before returning (IdentityFailure).
std::pair<XPoly, XPoly> gh_decompose(const EllipticParams& params);

// Verified data of the (2,3,6) quasi-torus decomposition
// Z^6 F_B = -4 G^3 - 27 H^2 with F_B the degree-6 homogenization of D_E.
struct TorusCertificate {
    XPoly de;    // D_E(t, x)
    XPoly g;
    XPoly h;
    XPoly f;     // curve model f = -D_E = 4g^3 + 27h^2
    TriPoly big_g; // G(T,X,Z), homogeneous of degree 4
    TriPoly big_h; // H(T,X,Z), homogeneous of degree 6
    int p = 3;
    int q = 2;
    int r = 6;   // F3 = Z
};

TorusCertificate quasi_torus_certificate(const EllipticParams& params);

// Exact coprimality certificate for (G, H), (G, Z), (H, Z): restricts the two
// forms to rational lines and certifies a nonzero resultant; common points
// (the cusps) force retries with fresh lines.
bool certify_pairwise_coprime(const TriPoly& big_g, const TriPoly& big_h, int max_attempts = 64);

// The 3-torsion Mumford seed: curve y^2 = f, u0 = -3g (monic quartic
// x^4 + 6tx - 3a), v0 = (3 sqrt(3) h) mod u0.  Requires the ambient radical
// d = 3 (WrongAmbientRadical) and b != 0 (DegenerateModel: for b = 0 the
// sextic passes through the projection center and deg_x f drops to 5).
struct TorsionSeed {
    Genus2Curve curve;
    XPoly u0;
    XPoly v0;
};

TorsionSeed torsion_seed(const EllipticParams& params, long session_disc = 3);

// The three exact identities certifying that the zero divisor of
// y - sqrt(27) h is 3 div[u0, v0]:
//   (i)  f - 27 h^2 = 4 g^3
//   (ii) f - 27 h^2 = -(4/27) u0^3
//   (iii) f = v0^2 (mod u0)
struct SeedCertification {
    bool norm_identity = false;
    bool cube_identity = false;
    bool congruence = false;

    bool ok() const { return norm_identity && cube_identity && congruence; }
};

SeedCertification certify_seed_parts(const XPoly& f, const XPoly& g, const XPoly& h,
                                     const XPoly& u0, const XPoly& v0);

SeedCertification torsion_seed_certify(const EllipticParams& params);

// Per-fiber singularity data of the branch sextic.
struct CuspReport {
    TPoly projection;                             // monic squarefree T-elimination polynomial
    std::vector<std::pair<TPoly, int>> multiplicity; // squarefree decomposition of the raw gcd
    bool infinity_cusp = false;                   // [1,0,0] singular
    int infinity_count = 0;                       // distinct singular points on Z = 0
    std::vector<FiberCount> fibers;               // D5 analysis over the projection
    bool admissible = false;
    std::optional<TPoly> witness;                 // product of multi-cusp fibers
};

// Projection of the singular locus to the T-line plus the infinity-line scan;
// admissible iff every line through the center [0,1,0] carries at most one
// singular point.
CuspReport cusp_projection(const EllipticParams& params);

// Distinct singular points of D_E = 0 above each factor of the squarefree
// modulus, by dynamic evaluation.  Returns (factor, count) pairs.
std::vector<std::pair<TPoly, int>> fiber_cusps_count(const EllipticParams& params,
                                                     const TPoly& modulus);

} // namespace g2
