#pragma once

#include <gmpxx.h>

#include <string>

#include "lssa/errors.hpp"

namespace lssa {

/* Arbitrary-precision rational. Canonical form is maintained by GMP:
 * gcd(|num|, den) = 1, den > 0, zero is 0/1. */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw division_by_zero();
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw error("cannot parse rational: " + s);
        if (v.get_den() == 0) throw division_by_zero();
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw division_by_zero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero();
        return Rational(mpq_class(1 / v_));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd of rationals: gcd of numerators over lcm of denominators; used for
    // integer content extraction. Both arguments integers in practice.
    mpz_class g, l;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(mpq_class(g, l));
}

} // namespace lssa
