#pragma once

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "g2dual/errors.hpp"

namespace g2 {

// Dense univariate polynomial over a field F.
//
// F must be default-constructible to zero, constructible from long, and
// provide +, -, *, /, ==, is_zero().  The zero polynomial has an empty
// coefficient vector; its degree is the disengaged optional (acting as the
// "minus infinity" marker, ordered below every integer).
template <class F>
class Poly {
public:
    Poly() = default;
    Poly(long n) : Poly(F(n)) {} // NOLINT(google-explicit-constructor)
    explicit Poly(F c) {
        c_.push_back(std::move(c));
        trim();
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable() { return monomial(F(1), 1); }
    static Poly monomial(F c, int k) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(k) + 1, F());
            p.c_.back() = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    // degree of a polynomial known to be nonzero
    int deg() const {
        if (c_.empty()) fail(Errc::ZeroInput, "degree of the zero polynomial");
        return static_cast<int>(c_.size()) - 1;
    }

    const F& coeff(int k) const {
        static const F zero{};
        if (k < 0 || static_cast<size_t>(k) >= c_.size()) return zero;
        return c_[static_cast<size_t>(k)];
    }
    const F& leading() const {
        if (c_.empty()) fail(Errc::ZeroInput, "leading coefficient of the zero polynomial");
        return c_.back();
    }
    const F& constant_term() const { return coeff(0); }
    const std::vector<F>& coeffs() const { return c_; }

    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), F());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const F& s) {
        for (auto& c : c_) c *= s;
        trim();
        return *this;
    }
    Poly& operator/=(const F& s) {
        if (s.is_zero()) fail(Errc::DivisionByZero, "polynomial divided by zero scalar");
        for (auto& c : c_) c /= s;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, F());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(Poly a, const F& s) { return a *= s; }
    friend Poly operator*(const F& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const F& s) { return a /= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    F eval(const F& at) const {
        F acc{};
        for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        Poly r;
        r.c_.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * F(static_cast<long>(i)));
        r.trim();
        return r;
    }

    Poly pow(unsigned e) const {
        Poly r(1);
        Poly base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    // multiply by variable^k
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.c_.assign(c_.size() + static_cast<size_t>(k), F());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
        return r;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Poly<F> make_monic(const Poly<F>& p) {
    if (p.is_zero()) fail(Errc::ZeroInput, "cannot normalize the zero polynomial to monic");
    if (p.is_monic()) return p;
    return p / p.leading();
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) fail(Errc::ZeroDivisor, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    const int db = b.deg();
    const F& lb = b.leading();
    std::vector<F> rem(a.coeffs());
    std::vector<F> quo(a.coeffs().size() - static_cast<size_t>(db), F());
    for (int k = a.deg() - db; k >= 0; --k) {
        F q = rem[static_cast<size_t>(k + db)] / lb;
        if (q.is_zero()) continue;
        quo[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.coeff(i);
    }
    return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(Errc::NonExactDivision, "division left a nonzero remainder");
    return q;
}

// Monic gcd by the Euclidean algorithm; remainders are renormalized monic at
// every step to keep coefficient growth down in the rational-function tower.
template <class F>
Poly<F> gcd_poly(Poly<F> a, Poly<F> b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = r.is_zero() ? Poly<F>() : make_monic(r);
    }
    return make_monic(a);
}

// g = s*a + t*b with g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0(1), s1;
    Poly<F> t0, t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const F lc = r0.leading();
    return {r0 / lc, s0 / lc, t0 / lc};
}

template <class F>
F scalar_pow(F base, int e) {
    F r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Resultant via the Euclidean remainder sequence:
//   Res(A, c)  = c^deg(A)                      for constant c,
//   Res(A, B)  = (-1)^(deg A * deg B) Res(B, A),
//   Res(B, A)  = lc(B)^(deg A - deg R) Res(B, R)   with R = A mod B.
// Equals the Sylvester-matrix determinant; the test suite checks the two
// routes against each other.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) fail(Errc::ZeroInput, "resultant of the zero polynomial");
    F acc(1);
    bool negate = false;
    for (;;) {
        if (a.deg() == 0) {
            acc *= scalar_pow(a.leading(), b.deg());
            break;
        }
        if (b.deg() == 0) {
            acc *= scalar_pow(b.leading(), a.deg());
            break;
        }
        if (a.deg() < b.deg()) {
            if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
            std::swap(a, b);
            continue;
        }
        Poly<F> r = a % b;
        if (r.is_zero()) return F(); // common factor of positive degree
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        acc *= scalar_pow(b.leading(), a.deg() - r.deg());
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -acc : acc;
}

// disc(p) = (-1)^(n(n-1)/2) * Res(p, p') / lc(p), n = deg p.  With this
// normalization disc(u^3 + pu + q) = -4p^3 - 27q^2.
template <class F>
F discriminant(const Poly<F>& p) {
    if (p.is_zero()) fail(Errc::ZeroInput, "discriminant of the zero polynomial");
    const int n = p.deg();
    if (n < 1) fail(Errc::ZeroInput, "discriminant of a constant");
    if (n == 1) return F(1);
    F res = resultant(p, p.derivative());
    F d = res / p.leading();
    return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

// Monic generator of the radical: p / gcd(p, p'), valid over characteristic 0.
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.is_zero()) fail(Errc::ZeroInput, "squarefree part of the zero polynomial");
    if (p.deg() == 0) return Poly<F>(1);
    Poly<F> g = gcd_poly(p, p.derivative());
    return make_monic(exact_div(p, g));
}

// Squarefree decomposition by the gcd chain: returns [(q1,1),(q2,2),...] with
// p = lc * prod qi^i, qi monic squarefree and pairwise coprime; trivial qi
// are omitted.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& p) {
    if (p.is_zero()) fail(Errc::ZeroInput, "squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly<F>, int>> out;
    if (p.deg() == 0) return out;
    Poly<F> a = make_monic(p);
    Poly<F> g = gcd_poly(a, a.derivative());
    Poly<F> w = exact_div(a, g); // product of distinct factors
    int i = 1;
    while (w.deg() > 0) {
        Poly<F> y = gcd_poly(w, g);
        Poly<F> qi = exact_div(w, y);
        if (qi.deg() > 0) out.emplace_back(qi, i);
        g = exact_div(g, y);
        w = std::move(y);
        ++i;
    }
    return out;
}

} // namespace g2
