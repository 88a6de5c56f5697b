#pragma once

#include "g2dual/dual_torus.hpp"

namespace g2 {

// End-to-end verdict for one (a, b): the canonical reduced 3-torsion divisor,
// its order, the fibers where its horizontal closure meets the infinity
// sections O+ and O-, and the admissibility of the projection center.
struct NagellLutzVerdict {
    EllipticParams params;
    MumfordDivisor reduced;  // div[u1, v1]
    bool order_three = false;
    TPoly meeting_fibers;    // monic squarefree; 1 means no meeting
    TPoly v_only_poles;      // v-denominator factors coprime to the u-denominators
    bool admissible_center = false;
    std::optional<TPoly> witness; // from the cusp report, when inadmissible

    // counterexample to the Nagell-Lutz-type statement at the canonical
    // representative
    bool counterexample() const {
        return order_three && admissible_center && meeting_fibers.deg() > 0;
    }
};

// torsion_seed followed by one Algorithm-1 reduction: deg u = 2 output.
MumfordDivisor reduced_torsion_divisor(const EllipticParams& params, long session_disc = 3);

// Monic squarefree part of the lcm of all coefficient denominators of u and v:
// the t-values where an affine point of div[u, v] escapes to x = inf.
TPoly infinity_meeting_fibers(const MumfordDivisor& d1);

NagellLutzVerdict nagell_lutz_report(const EllipticParams& params, long session_disc = 3);

} // namespace g2
