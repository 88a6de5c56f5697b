#include "g2dual/nagell_lutz.hpp"

namespace g2 {

MumfordDivisor reduced_torsion_divisor(const EllipticParams& params, long session_disc) {
    TorsionSeed seed = torsion_seed(params, session_disc);
    return reduce_deg4(seed.curve, MumfordDivisor{seed.u0, seed.v0});
}

TPoly infinity_meeting_fibers(const MumfordDivisor& d1) {
    if (d1.u.is_zero() || d1.u.deg() != 2)
        fail(Errc::InvalidInput, "meeting-fiber analysis expects a degree-2 divisor");
    TPoly all = lcm_poly(denominator_lcm(d1.u), denominator_lcm(d1.v));
    return all.deg() == 0 ? TPoly(1) : squarefree_part(all);
}

NagellLutzVerdict nagell_lutz_report(const EllipticParams& params, long session_disc) {
    TorsionSeed seed = torsion_seed(params, session_disc);
    MumfordDivisor d1 = reduce_deg4(seed.curve, MumfordDivisor{seed.u0, seed.v0});

    NagellLutzVerdict verdict{params, d1};
    verdict.order_three = class_order_is_three(seed.curve, ReducedClass{d1});
    verdict.meeting_fibers = infinity_meeting_fibers(d1);

    TPoly u_rad = denominator_lcm(d1.u);
    u_rad = u_rad.deg() == 0 ? TPoly(1) : squarefree_part(u_rad);
    TPoly v_rad = denominator_lcm(d1.v);
    v_rad = v_rad.deg() == 0 ? TPoly(1) : squarefree_part(v_rad);
    verdict.v_only_poles = exact_div(v_rad, gcd_poly(v_rad, u_rad));

    CuspReport cusps = cusp_projection(params);
    verdict.admissible_center = cusps.admissible;
    verdict.witness = cusps.witness;
    return verdict;
}

} // namespace g2
