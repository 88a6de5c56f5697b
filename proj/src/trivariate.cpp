#include "g2dual/trivariate.hpp"

namespace g2 {

TriPoly TriPoly::monomial(QuadScalar c, int i, int j, int k) {
    TriPoly p;
    if (i < 0 || j < 0 || k < 0) fail(Errc::InvalidInput, "negative exponent in monomial");
    if (!c.is_zero()) p.terms_.emplace(Exponents{i, j, k}, std::move(c));
    return p;
}

QuadScalar TriPoly::coeff(int i, int j, int k) const {
    auto it = terms_.find(Exponents{i, j, k});
    return it == terms_.end() ? QuadScalar() : it->second;
}

std::optional<int> TriPoly::total_degree() const {
    std::optional<int> d;
    for (const auto& [e, c] : terms_) {
        int s = e[0] + e[1] + e[2];
        if (!d || s > *d) d = s;
    }
    return d;
}

bool TriPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = e[0] + e[1] + e[2];
        if (d < 0) d = s;
        if (s != d) return false;
    }
    return true;
}

void TriPoly::add_term(const Exponents& e, const QuadScalar& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TriPoly TriPoly::operator-() const {
    TriPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

TriPoly& TriPoly::operator*=(const QuadScalar& s) {
    if (s.is_zero()) return *this = TriPoly();
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

TriPoly TriPoly::pow(unsigned e) const {
    TriPoly r = TriPoly::monomial(QuadScalar(1), 0, 0, 0);
    TriPoly base = *this;
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

QuadScalar TriPoly::eval(const QuadScalar& T, const QuadScalar& X, const QuadScalar& Z) const {
    QuadScalar acc;
    for (const auto& [e, c] : terms_) {
        QuadScalar m = c;
        m *= scalar_pow(T, e[0]);
        m *= scalar_pow(X, e[1]);
        m *= scalar_pow(Z, e[2]);
        acc += m;
    }
    return acc;
}

TriPoly TriPoly::partial(int var) const {
    TriPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents e2 = e;
        e2[var] -= 1;
        r.add_term(e2, c * QuadScalar(e[var]));
    }
    return r;
}

Poly<QuadScalar> TriPoly::restrict_line(const std::array<QuadScalar, 3>& P,
                                        const std::array<QuadScalar, 3>& Q) const {
    using SP = Poly<QuadScalar>;
    std::array<SP, 3> coords;
    for (int v = 0; v < 3; ++v)
        coords[v] = SP(std::vector<QuadScalar>{P[v], Q[v]});
    SP acc;
    for (const auto& [e, c] : terms_) {
        SP m{QuadScalar(c)};
        for (int v = 0; v < 3; ++v) m *= coords[v].pow(static_cast<unsigned>(e[v]));
        acc += m;
    }
    return acc;
}

Poly<QuadScalar> TriPoly::on_infinity_line() const {
    std::vector<QuadScalar> cs;
    for (const auto& [e, c] : terms_) {
        if (e[2] != 0) continue;
        if (static_cast<size_t>(e[0]) >= cs.size()) cs.resize(static_cast<size_t>(e[0]) + 1);
        cs[static_cast<size_t>(e[0])] += c;
    }
    return Poly<QuadScalar>(std::move(cs));
}

TriPoly TriPoly::homogenize(const XPoly& p, int n) {
    TriPoly r;
    auto tc = tpoly_coeffs(p);
    for (size_t j = 0; j < tc.size(); ++j) {
        for (size_t i = 0; i < tc[j].coeffs().size(); ++i) {
            const QuadScalar& c = tc[j].coeffs()[i];
            if (c.is_zero()) continue;
            int k = n - static_cast<int>(i) - static_cast<int>(j);
            if (k < 0)
                fail(Errc::InvalidInput, "total degree exceeds homogenization target");
            r.add_term({static_cast<int>(i), static_cast<int>(j), k}, c);
        }
    }
    return r;
}

XPoly TriPoly::dehomogenize() const {
    XPoly r;
    for (const auto& [e, c] : terms_)
        r += XPoly::monomial(rf(TPoly::monomial(c, e[0])), e[1]);
    return r;
}

} // namespace g2
