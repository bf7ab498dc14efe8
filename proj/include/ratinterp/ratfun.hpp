#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratinterp/polynomial.hpp"

namespace ratinterp {

// Rational function kept as numerator polynomial over a multiset of
// denominator factors. Cancellation is by trial exact division only, never
// GCD; every divided-difference cancellation in this codebase is against an
// explicit factor, so that suffices.
class RatFun {
public:
    struct Factor {
        Polynomial poly;
        int mult = 1;
    };

    RatFun() = default;
    RatFun(Polynomial num) : num_(std::move(num)) {}
    RatFun(Polynomial num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static RatFun constant(Rational c) { return RatFun(Polynomial::constant(std::move(c))); }
    static RatFun constant(long c) { return constant(Rational(c)); }
    static RatFun variable(const Variable& v) { return RatFun(Polynomial::variable(v)); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    Rational constant_value() const { return num_.constant_value(); }

    const Polynomial& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return den_; }
    Polynomial denominator_expanded() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator-() const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator*(const Rational& c) const;
    RatFun operator/(const RatFun& o) const;
    RatFun inverse() const;
    RatFun pow(int e) const;

    // Value equality via cross-multiplication.
    bool operator==(const RatFun& o) const;

    bool contains(const Variable& v) const;
    std::set<Variable> variables() const;

    RatFun substitute(const std::map<Variable, RatFun>& binding) const;
    Rational eval(const std::map<Variable, Rational>& point) const;
    RatFun rename(const std::map<Variable, Variable>& how) const;
    RatFun swap_vars(const Variable& a, const Variable& b) const;

    std::string str() const;

private:
    void normalize();
    Polynomial num_;
    std::vector<Factor> den_;
};

inline RatFun operator*(const Rational& c, const RatFun& f) { return f * c; }
inline RatFun operator+(const Polynomial& p, const RatFun& f) { return RatFun(p) + f; }

} // namespace ratinterp
