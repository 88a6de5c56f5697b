#pragma once

#include <utility>

#include "g2dual/poly.hpp"

namespace g2 {

// Quotient field of Poly<F>, kept normalized at every operation: the
// denominator is monic, coprime to the numerator and never zero; the zero
// element is 0/1.  Eager cancellation is deliberate — intermediate expression
// swell is the failure mode of this pipeline.
template <class P>
class Fraction {
public:
    Fraction() : num_(), den_(1) {}
    Fraction(long n) : num_(n), den_(1) {} // NOLINT(google-explicit-constructor)
    explicit Fraction(P num) : num_(std::move(num)), den_(1) {}
    Fraction(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) fail(Errc::ZeroDenominator, "rational function with zero denominator");
        normalize();
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Fraction operator-() const { return Fraction(UncheckedTag{}, -num_, den_); }

    Fraction inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of the zero rational function");
        Fraction r(UncheckedTag{}, den_, num_);
        r.make_den_monic();
        return r;
    }

    Fraction& operator+=(const Fraction& o) {
        P g = gcd_poly(den_, o.den_);
        P da = exact_div(den_, g);
        P db = exact_div(o.den_, g);
        *this = Fraction(num_ * db + o.num_ * da, da * o.den_);
        return *this;
    }
    Fraction& operator-=(const Fraction& o) { return *this += -o; }
    Fraction& operator*=(const Fraction& o) {
        if (is_zero() || o.is_zero()) return *this = Fraction();
        P g1 = gcd_poly(num_, o.den_);
        P g2 = gcd_poly(o.num_, den_);
        Fraction r(UncheckedTag{}, exact_div(num_, g1) * exact_div(o.num_, g2),
                   exact_div(den_, g2) * exact_div(o.den_, g1));
        r.make_den_monic();
        return *this = r;
    }
    Fraction& operator/=(const Fraction& o) { return *this *= o.inverse(); }

    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }

    // d/dvar by the quotient rule, renormalized.
    Fraction derivative() const {
        return Fraction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation at a coefficient-field point; the denominator must not vanish.
    template <class F>
    F eval(const F& at) const {
        F d = den_.eval(at);
        if (d.is_zero()) fail(Errc::DivisionByZero, "denominator vanishes at evaluation point");
        return num_.eval(at) / d;
    }

private:
    struct UncheckedTag {};
    Fraction(UncheckedTag, P num, P den) : num_(std::move(num)), den_(std::move(den)) {}

    void make_den_monic() {
        if (!den_.is_monic()) {
            auto lc = den_.leading();
            num_ /= lc;
            den_ /= lc;
        }
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = P(1);
            return;
        }
        P g = gcd_poly(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        make_den_monic();
    }

    P num_;
    P den_;
};

} // namespace g2
