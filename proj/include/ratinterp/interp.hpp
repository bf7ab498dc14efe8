#pragma once

#include <vector>

#include "ratinterp/divdiff.hpp"
#include "ratinterp/families.hpp"

namespace ratinterp {

// Interpolation variable used by default.
inline Variable interp_var() { return Variable::scalar("x"); }

// Expansion coefficients A_0..A_N of the rational Newton interpolation:
//   A_0 = f(x_1),
//   A_n = f(x_1)(x_1,C)_{n-1} d_1...d_n (1 - x_{n+1} c_n),  n >= 1,
// computed symbolically on the x/c families and then specialized per ctx.
std::vector<RatFun> rational_newton_coeffs(const RatFun& f, const InterpolationContext& ctx,
                                           int order, const Variable& x = interp_var());

// Basis term Y_n(x,X)/(x,C)_n with ctx-specialized x_i, c_i.
RatFun expansion_term(int n, const InterpolationContext& ctx, const Variable& x = interp_var());

// Partial sum  sum_{n=0..K} A_n * term_n.
RatFun reconstruct_partial(const RatFun& f, const InterpolationContext& ctx, int order,
                           const Variable& x = interp_var());

// The bracketed part of Liu's expansion:
//   n = 0:  f(aq)
//   n >= 1: D_q^n [ f(x) (x;q)_{n-1} ] |_{x = aq},   D_q f = (f(x) - f(qx))/x.
// The full Liu coefficient is (1 - a q^{2n})/(q;q)_n times this bracket.
RatFun liu_coefficient(int n, const RatFun& f, const RatFun& a,
                       const Variable& q = Variable::scalar("q"),
                       const Variable& x = interp_var());

// q-derivative D_q f(x) = (f(x) - f(qx))/x.
RatFun q_derivative(const RatFun& f, const Variable& q = Variable::scalar("q"),
                    const Variable& x = interp_var());

// Closed-form k-th coefficient of the expansion of (1-ux)/(1-vx):
//   (v-u) Y_{k-1}(v,C) (1 - x_{k+1} c_k) / (v,X)_{k+1},  k >= 1.
RatFun bibasic_coefficient(int k, const RatFun& u, const RatFun& v,
                           const InterpolationContext& ctx);

} // namespace ratinterp
