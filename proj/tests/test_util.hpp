#pragma once

#include <vector>

#include "ratinterp/ratfun.hpp"

namespace testutil {

using ratinterp::Monomial;
using ratinterp::Polynomial;
using ratinterp::RatFun;
using ratinterp::Rational;
using ratinterp::Variable;

// splitmix64: deterministic across platforms, unlike <random> distributions.
class Rng {
public:
    explicit Rng(unsigned long long seed) : state_(seed) {}
    unsigned long long next() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rational() {
        long num = range(-9, 9);
        if (num == 0) num = 1;
        return Rational(num, range(1, 9));
    }
    Rational nonzero_rational() {
        long num = range(-9, 9);
        if (num == 0) num = 1;
        return Rational(num, range(1, 9));
    }

    // Sparse polynomial in the given variables, exponents in [lo_exp, hi_exp].
    Polynomial polynomial(const std::vector<Variable>& vars, int terms, int lo_exp = 0,
                          int hi_exp = 3) {
        Polynomial p;
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (const auto& v : vars)
                m = m * Monomial(v, static_cast<int>(range(lo_exp, hi_exp)));
            p += Polynomial::term(m, rational());
        }
        return p;
    }

    RatFun ratfun(const std::vector<Variable>& vars) {
        Polynomial num = polynomial(vars, 3);
        Polynomial den = Polynomial::constant(1) + polynomial(vars, 2, 1, 2);
        if (den.is_zero()) den = Polynomial::constant(1);
        return RatFun(num) / RatFun(den);
    }

private:
    unsigned long long state_;
};

} // namespace testutil
