#pragma once

#include <vector>

#include "ratinterp/series.hpp"

namespace ratinterp {

// (a;q)_n = prod_{j=0..n-1} (1 - a q^j). Negative lengths follow the usual
// convention (a;q)_{-k} = 1 / prod_{j=1..k} (1 - a q^{-j}), so the result is
// a RatFun in general; for n >= 0 it is a polynomial.
RatFun pochhammer(const RatFun& a, const Variable& q, int n);

// Polynomial form, n >= 0 and polynomial base.
Polynomial pochhammer_poly(const Polynomial& a, const Variable& q, int n);

// (a;q)_infinity truncated at the given order. The base must be free of
// negative q powers; factors (1 - a q^j) with min-q-degree beyond the order
// are identically 1 modulo q^{order+1} and are omitted.
TruncatedSeries pochhammer_inf(const Polynomial& a, const Variable& q, int order);

// Gaussian binomial [n over k]_q.
Polynomial q_binomial(int n, int k, const Variable& q);

// Basic hypergeometric series r_phi_s, summed exactly over the first
// terms+1 indices. upper/lower are the a's and b's, z the argument.
struct HypergeometricSpec {
    std::vector<RatFun> upper;
    std::vector<RatFun> lower;
    Variable q_var;
    RatFun argument;
};

RatFun basic_hypergeometric(const HypergeometricSpec& spec, int terms);

} // namespace ratinterp
