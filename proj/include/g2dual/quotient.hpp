#pragma once

#include <vector>

#include "g2dual/algebra.hpp"

namespace g2 {

// Per-factor result of the modular singularity analysis.
struct FiberCount {
    TPoly factor;   // monic squarefree divisor of the input modulus
    int gcd_degree; // deg gcd_x of the inputs over Q(sqrt d)[T]/(factor)
    int distinct;   // deg of the squarefree part of that gcd = #distinct points
};

inline constexpr int kDefaultSplitDepth = 64;

// gcd_x of the given x-polynomials (coefficients in t, ascending x order),
// computed over the quotient ring Q(sqrt d)[T]/(modulus) by dynamic
// evaluation: whenever a leading coefficient is a zero divisor, the modulus
// splits along the gcd and both branches are recomputed (D5 principle).
// The modulus must be squarefree (NonSquarefreeModulus otherwise); exceeding
// depth_limit splits raises AdmissibilityUndecided.
std::vector<FiberCount> fiber_singularity_counts(const std::vector<std::vector<TPoly>>& polys,
                                                 const TPoly& modulus,
                                                 int depth_limit = kDefaultSplitDepth);

} // namespace g2
