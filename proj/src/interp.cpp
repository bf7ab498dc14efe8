#include "ratinterp/interp.hpp"

#include "ratinterp/errors.hpp"
#include "ratinterp/qseries.hpp"

namespace ratinterp {

namespace {

RatFun sub_x(const RatFun& f, const Variable& x, const RatFun& value) {
    return f.substitute({{x, value}});
}

} // namespace

std::vector<RatFun> rational_newton_coeffs(const RatFun& f, const InterpolationContext& ctx,
                                           int order, const Variable& x) {
    if (order < 0) throw IndexOutOfRange("negative expansion order");
    std::vector<RatFun> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    // The chain runs on fresh b-variables and is specialized back to the
    // x-family afterwards; acting on the x's directly would collapse any f
    // that itself mentions x_1 (such as a basis term) at the f(x_1) step.
    RatFun b1 = RatFun::variable(Variable::b(1));
    RatFun f_b1 = sub_x(f, x, b1);
    coeffs.push_back(specialize_b_to_x(f_b1, 1).substitute(ctx.bind(0)));
    for (int n = 1; n <= order; ++n) {
        RatFun g = f_b1;
        for (int j = 1; j <= n - 1; ++j)
            g = g * (RatFun::constant(1) - b1 * RatFun::variable(Variable::c(j)));
        g = apply_chain(g, 1, n, Family::B);
        g = specialize_b_to_x(g, n + 1);
        g = g * (RatFun::constant(1) -
                 RatFun::variable(Variable::x(n + 1)) * RatFun::variable(Variable::c(n)));
        coeffs.push_back(g.substitute(ctx.bind(n)));
    }
    return coeffs;
}

RatFun expansion_term(int n, const InterpolationContext& ctx, const Variable& x) {
    if (n < 0) throw IndexOutOfRange("negative basis index");
    RatFun xr = RatFun::variable(x);
    RatFun num = RatFun::constant(1);
    RatFun den = RatFun::constant(1);
    for (int i = 1; i <= n; ++i) {
        num = num * (xr - ctx.x_term(i));
        den = den * (RatFun::constant(1) - xr * ctx.c_term(i));
    }
    return num / den;
}

RatFun reconstruct_partial(const RatFun& f, const InterpolationContext& ctx, int order,
                           const Variable& x) {
    std::vector<RatFun> coeffs = rational_newton_coeffs(f, ctx, order, x);
    RatFun total;
    for (int n = 0; n <= order; ++n) total = total + coeffs[static_cast<std::size_t>(n)] *
                                                        expansion_term(n, ctx, x);
    return total;
}

RatFun q_derivative(const RatFun& f, const Variable& q, const Variable& x) {
    RatFun shifted = sub_x(f, x, RatFun::variable(q) * RatFun::variable(x));
    return (f - shifted) / RatFun::variable(x);
}

RatFun liu_coefficient(int n, const RatFun& f, const RatFun& a, const Variable& q,
                       const Variable& x) {
    if (n < 0) throw IndexOutOfRange("negative Liu index");
    RatFun aq = a * RatFun::variable(q);
    if (n == 0) return sub_x(f, x, aq);
    RatFun g = f * pochhammer(RatFun::variable(x), q, n - 1);
    for (int j = 0; j < n; ++j) g = q_derivative(g, q, x);
    return sub_x(g, x, aq);
}

RatFun bibasic_coefficient(int k, const RatFun& u, const RatFun& v,
                           const InterpolationContext& ctx) {
    if (k < 1) throw IndexOutOfRange("bibasic coefficient needs k >= 1");
    RatFun num = v - u;
    for (int j = 1; j <= k - 1; ++j) num = num * (v - ctx.c_term(j));
    num = num * (RatFun::constant(1) - ctx.x_term(k + 1) * ctx.c_term(k));
    RatFun den = RatFun::constant(1);
    for (int j = 1; j <= k + 1; ++j) den = den * (RatFun::constant(1) - v * ctx.x_term(j));
    return num / den;
}

} // namespace ratinterp
