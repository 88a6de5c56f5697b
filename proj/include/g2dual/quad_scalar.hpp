#pragma once

#include <string>

#include "g2dual/rational.hpp"

namespace g2 {

// Returns true iff d > 1 and no square of a prime divides d.
bool is_valid_radical_disc(long d);

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
//
// The discriminant is carried per value: d == 0 encodes a plain rational
// (b == 0), compatible with every ambient field.  Combining two values whose
// radical parts live over different d is a hard error (MixedRadical); the
// per-session d of the CLI is enforced at the parsing boundary.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(long n) : a_(n) {} // NOLINT(google-explicit-constructor)
    QuadScalar(Rational r) : a_(std::move(r)) {} // NOLINT(google-explicit-constructor)
    QuadScalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) {
            d_ = 0;
        } else if (!is_valid_radical_disc(d_)) {
            fail(Errc::InvalidDiscriminant,
                 "radical discriminant must be a squarefree integer > 1, got " + std::to_string(d));
        }
    }

    static QuadScalar sqrt_of(long d) { return QuadScalar(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long disc() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadScalar conjugate() const { return QuadScalar(a_, -b_, d_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_); }

    QuadScalar& operator+=(const QuadScalar& o) {
        long d = combine_disc(o);
        *this = QuadScalar(a_ + o.a_, b_ + o.b_, d);
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o) {
        long d = combine_disc(o);
        *this = QuadScalar(a_ - o.a_, b_ - o.b_, d);
        return *this;
    }
    QuadScalar& operator*=(const QuadScalar& o) {
        long d = combine_disc(o);
        Rational ra = a_ * o.a_ + Rational(d) * b_ * o.b_;
        Rational rb = a_ * o.b_ + b_ * o.a_;
        *this = QuadScalar(std::move(ra), std::move(rb), d);
        return *this;
    }
    QuadScalar& operator/=(const QuadScalar& o) { return *this *= o.inverse(); }

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(QuadScalar a, const QuadScalar& b) { return a *= b; }
    friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    // (a - b*sqrt(d)) / (a^2 - d b^2); the norm is nonzero for nonzero input
    // because d is never a rational square.
    QuadScalar inverse() const {
        if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero scalar");
        Rational n = norm();
        return QuadScalar(a_ / n, -b_ / n, d_);
    }

    // sign of the leading printed component; used for canonical term rendering
    bool leading_negative() const { return a_.is_zero() ? b_.sign() < 0 : a_.sign() < 0; }

private:
    long combine_disc(const QuadScalar& o) const {
        if (d_ == 0) return o.d_;
        if (o.d_ == 0 || o.d_ == d_) return d_;
        fail(Errc::MixedRadical, "mixing sqrt(" + std::to_string(d_) + ") with sqrt(" +
                                     std::to_string(o.d_) + ")");
    }

    Rational a_;
    Rational b_;
    long d_ = 0;
};

inline bool is_valid_radical_disc(long d) {
    if (d <= 1) return false;
    long n = d;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return false;
    }
    return true;
}

} // namespace g2
