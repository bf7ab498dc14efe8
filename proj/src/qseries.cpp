#include "ratinterp/qseries.hpp"

#include "ratinterp/errors.hpp"

namespace ratinterp {

RatFun pochhammer(const RatFun& a, const Variable& q, int n) {
    RatFun qv = RatFun::variable(q);
    RatFun r = RatFun::constant(1);
    if (n >= 0) {
        for (int j = 0; j < n; ++j) r = r * (RatFun::constant(1) - a * qv.pow(j));
        return r;
    }
    for (int j = 1; j <= -n; ++j) r = r * (RatFun::constant(1) - a * qv.pow(-j));
    return r.inverse();
}

Polynomial pochhammer_poly(const Polynomial& a, const Variable& q, int n) {
    if (n < 0) throw IndexOutOfRange("pochhammer_poly needs n >= 0");
    Polynomial r = Polynomial::constant(1);
    Polynomial one = Polynomial::constant(1);
    for (int j = 0; j < n; ++j)
        r = r * (one - a.shift(Monomial(q, j)));
    return r;
}

TruncatedSeries pochhammer_inf(const Polynomial& a, const Variable& q, int order) {
    TruncatedSeries s = TruncatedSeries::one(q, order);
    if (a.is_zero()) return s;
    int m = a.min_degree(q);
    if (m < 0)
        throw TruncationUnreachable("pochhammer_inf base has negative powers of " + q.str());
    Polynomial one = Polynomial::constant(1);
    for (int j = 0; m + j <= order; ++j) {
        Polynomial factor = one - a.shift(Monomial(q, j));
        s = s * TruncatedSeries::from_polynomial(factor, q, order);
    }
    return s;
}

Polynomial q_binomial(int n, int k, const Variable& q) {
    if (k < 0 || k > n) throw IndexOutOfRange("q_binomial needs 0 <= k <= n");
    // q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]
    std::vector<Polynomial> row{Polynomial::constant(1)};
    for (int i = 1; i <= n; ++i) {
        std::vector<Polynomial> next(static_cast<std::size_t>(i) + 1);
        next[0] = Polynomial::constant(1);
        next[static_cast<std::size_t>(i)] = Polynomial::constant(1);
        for (int j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] +
                row[static_cast<std::size_t>(j)].shift(Monomial(q, j));
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

RatFun basic_hypergeometric(const HypergeometricSpec& spec, int terms) {
    const int r = static_cast<int>(spec.upper.size());
    const int s = static_cast<int>(spec.lower.size());
    const int correction = 1 + s - r;
    RatFun qv = RatFun::variable(spec.q_var);
    RatFun total;
    for (int n = 0; n <= terms; ++n) {
        RatFun term = RatFun::constant(1);
        for (const auto& a : spec.upper) term = term * pochhammer(a, spec.q_var, n);
        // (q;q)_n is part of every lower Pochhammer product
        RatFun den = pochhammer(qv, spec.q_var, n);
        for (const auto& b : spec.lower) den = den * pochhammer(b, spec.q_var, n);
        if (den.is_zero()) throw PoleHit("vanishing lower Pochhammer at n=" + std::to_string(n));
        term = term / den;
        if (correction != 0) {
            RatFun corr = qv.pow(n * (n - 1) / 2);
            if (n % 2 == 1) corr = -corr;
            term = term * corr.pow(correction);
        }
        term = term * spec.argument.pow(n);
        total = total + term;
    }
    return total;
}

} // namespace ratinterp
