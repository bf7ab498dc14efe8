#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "ratinterp/errors.hpp"

namespace ratinterp {

// Arbitrary-precision rational scalar. Always canonical: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZeroSymbol("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const std::string& s) : v_(s) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), canonical_tag{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), canonical_tag{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), canonical_tag{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), canonical_tag{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw DivisionByZeroSymbol("rational division by zero");
        return Rational(mpq_class(v_ / o.v_), canonical_tag{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroSymbol("inverse of zero");
        return Rational(mpq_class(1 / v_), canonical_tag{});
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_)), canonical_tag{}); }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        mpq_class r(1), b(v_);
        for (long k = e; k > 0; k >>= 1) {
            if (k & 1) r *= b;
            b *= b;
        }
        return Rational(r, canonical_tag{});
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const { return v_.get_str(); }
    const mpq_class& raw() const { return v_; }

private:
    struct canonical_tag {};
    Rational(mpq_class q, canonical_tag) : v_(std::move(q)) {}
    mpq_class v_;
};

} // namespace ratinterp
