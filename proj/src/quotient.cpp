#include "g2dual/quotient.hpp"

#include <utility>

namespace g2 {
namespace {

// thrown when a zero divisor obstructs an inversion mod m
struct SplitSignal {
    TPoly factor; // proper monic divisor of the modulus
};

// x-polynomial with residue-class coefficients, dense ascending
using ModPoly = std::vector<TPoly>;

struct Ring {
    TPoly m;

    TPoly reduce(const TPoly& a) const { return a % m; }

    bool is_zero(const TPoly& a) const { return reduce(a).is_zero(); }

    // inverse of a unit; throws SplitSignal on a zero divisor
    TPoly invert(const TPoly& a) const {
        auto [g, s, t] = ext_gcd(reduce(a), m);
        if (g.deg() == 0) return reduce(s);
        if (g.deg() == m.deg())
            fail(Errc::Internal, "inversion of zero residue");
        throw SplitSignal{g};
    }

    TPoly mul(const TPoly& a, const TPoly& b) const { return reduce(a * b); }
};

void strip(const Ring& R, ModPoly& p) {
    for (auto& c : p) c = R.reduce(c);
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ModPoly mod_rem(const Ring& R, ModPoly a, const ModPoly& b, const TPoly& lb_inv) {
    const size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
        TPoly q = R.mul(a.back(), lb_inv);
        if (!q.is_zero()) {
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < db; ++i) {
                a[shift + i] -= q * b[i];
                a[shift + i] = R.reduce(a[shift + i]);
            }
        }
        a.pop_back();
        while (!a.empty() && R.is_zero(a.back())) a.pop_back();
    }
    return a;
}

// monic gcd of a and b in R[x]; may throw SplitSignal
ModPoly mod_gcd(const Ring& R, ModPoly a, ModPoly b) {
    strip(R, a);
    strip(R, b);
    while (!b.empty()) {
        TPoly inv = R.invert(b.back());
        ModPoly r = mod_rem(R, std::move(a), b, inv);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        TPoly inv = R.invert(a.back());
        for (auto& c : a) c = R.mul(c, inv);
    }
    return a;
}

ModPoly mod_derivative(const Ring& R, const ModPoly& p) {
    ModPoly r;
    if (p.size() <= 1) return r;
    r.reserve(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i)
        r.push_back(R.reduce(p[i] * TPoly(QuadScalar(static_cast<long>(i)))));
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

std::vector<FiberCount> analyze(const std::vector<std::vector<TPoly>>& polys, TPoly modulus,
                                int depth, int depth_limit) {
    if (depth > depth_limit)
        fail(Errc::AdmissibilityUndecided, "D5 splitting exceeded the configured depth bound");
    Ring R{std::move(modulus)};
    try {
        ModPoly g;
        bool first = true;
        for (const auto& p : polys) {
            ModPoly q = p;
            strip(R, q);
            if (first) {
                g = std::move(q);
                first = false;
            } else {
                g = mod_gcd(R, std::move(g), std::move(q));
            }
            if (g.size() == 1) break; // gcd is already a unit
        }
        int deg = g.empty() ? -1 : static_cast<int>(g.size()) - 1;
        if (deg < 0)
            fail(Errc::Internal, "all inputs vanish identically on the modulus");
        int distinct = deg;
        if (deg > 0) {
            ModPoly w = mod_gcd(R, g, mod_derivative(R, g));
            distinct = deg - (w.empty() ? 0 : static_cast<int>(w.size()) - 1);
        }
        return {FiberCount{R.m, deg, distinct}};
    } catch (const SplitSignal& split) {
        TPoly f1 = split.factor;
        TPoly f2 = make_monic(exact_div(R.m, f1));
        auto left = analyze(polys, f1, depth + 1, depth_limit);
        auto right = analyze(polys, f2, depth + 1, depth_limit);
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }
}

} // namespace

std::vector<FiberCount> fiber_singularity_counts(const std::vector<std::vector<TPoly>>& polys,
                                                 const TPoly& modulus, int depth_limit) {
    if (modulus.is_zero()) fail(Errc::ZeroInput, "zero modulus");
    if (modulus.deg() < 1) fail(Errc::InvalidInput, "modulus must have positive degree");
    TPoly m = make_monic(modulus);
    if (gcd_poly(m, m.derivative()).deg() != 0)
        fail(Errc::NonSquarefreeModulus, "modulus has a repeated factor");
    if (polys.empty()) fail(Errc::InvalidInput, "no polynomials given");
    return analyze(polys, m, 0, depth_limit);
}

} // namespace g2
