#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratinterp/interp.hpp"
#include "ratinterp/qseries.hpp"
#include "test_util.hpp"

using namespace ratinterp;

namespace {

const Variable X = interp_var();
const Variable Q = Variable::scalar("q");

RatFun xr() { return RatFun::variable(X); }
RatFun xvar(int i) { return RatFun::variable(Variable::x(i)); }
RatFun cvar(int i) { return RatFun::variable(Variable::c(i)); }

InterpolationContext liu_context() {
    RatFun a = RatFun::variable(Variable::scalar("a"));
    RatFun q = RatFun::variable(Q);
    return {FamilySpec::geometric(a * q, q), FamilySpec::geometric(RatFun::constant(1), q)};
}

// Classical divided-difference table with symbolic nodes, built independently
// of the divdiff module.
RatFun dd_table(const RatFun& f, int lo, int hi) {
    if (lo == hi) return f.substitute({{X, xvar(lo)}});
    return (dd_table(f, lo + 1, hi) - dd_table(f, lo, hi - 1)) / (xvar(hi) - xvar(lo));
}

} // namespace

TEST_CASE("coefficients of simple functions") {
    InterpolationContext sym = InterpolationContext::symbolic();

    auto c1 = rational_newton_coeffs(RatFun::constant(1), sym, 3);
    CHECK(c1[0] == RatFun::constant(1));
    for (int n = 1; n <= 3; ++n) CHECK(c1[static_cast<std::size_t>(n)].is_zero());

    // f = Y_2(x,X)/(x,C)_2 reproduces the basis: A_2 = 1, everything else 0
    RatFun f = (xr() - xvar(1)) * (xr() - xvar(2)) /
               ((RatFun::constant(1) - xr() * cvar(1)) *
                (RatFun::constant(1) - xr() * cvar(2)));
    auto cf = rational_newton_coeffs(f, sym, 3);
    CHECK(cf[0].is_zero());
    CHECK(cf[1].is_zero());
    CHECK(cf[2] == RatFun::constant(1));
    CHECK(cf[3].is_zero());

    // Newton context, f = x^2: the classical table
    auto cx2 = rational_newton_coeffs(xr().pow(2), InterpolationContext::newton(), 3);
    CHECK(cx2[0] == xvar(1).pow(2));
    CHECK(cx2[1] == xvar(1) + xvar(2));
    CHECK(cx2[2] == RatFun::constant(1));
    CHECK(cx2[3].is_zero());
}

TEST_CASE("expansion terms") {
    InterpolationContext sym = InterpolationContext::symbolic();
    CHECK(expansion_term(0, sym) == RatFun::constant(1));

    RatFun a = RatFun::variable(Variable::scalar("a"));
    RatFun q = RatFun::variable(Q);
    CHECK(expansion_term(1, liu_context()) ==
          (xr() - a * q) / (RatFun::constant(1) - xr()));

    CHECK(expansion_term(2, InterpolationContext::newton()) ==
          (xr() - xvar(1)) * (xr() - xvar(2)));
}

TEST_CASE("partial-sum reconstruction") {
    InterpolationContext sym = InterpolationContext::symbolic();
    RatFun u = RatFun::variable(Variable::scalar("u"));
    RatFun v = RatFun::variable(Variable::scalar("v"));
    RatFun f = (RatFun::constant(1) - u * xr()) / (RatFun::constant(1) - v * xr());

    CHECK(reconstruct_partial(f, sym, 0) == f.substitute({{X, xvar(1)}}));

    // interpolation property at K = 2: partial sum meets f at x_1, x_2, x_3
    RatFun r2 = reconstruct_partial(f, sym, 2);
    for (int j = 1; j <= 3; ++j) {
        RatFun diff = (r2 - f).substitute({{X, xvar(j)}});
        CHECK(diff.is_zero());
    }

    // Newton exactness on a degree-2 polynomial
    RatFun p = xr().pow(2) * Rational(3) + xr() * Rational(-2) + RatFun::constant(5);
    CHECK(reconstruct_partial(p, InterpolationContext::newton(), 2) == p);
}

TEST_CASE("Newton degeneration matches an independent divided-difference table") {
    testutil::Rng rng(31);
    InterpolationContext newton = InterpolationContext::newton();
    for (int t = 0; t < 10; ++t) {
        Polynomial fp;
        for (int d = 0; d <= 3; ++d)
            fp += Polynomial::term(Monomial(X, d), rng.rational());
        RatFun f(fp);
        auto coeffs = rational_newton_coeffs(f, newton, 5);
        for (int n = 0; n <= 5; ++n)
            CHECK(coeffs[static_cast<std::size_t>(n)] == dd_table(f, 1, n + 1));
    }
}

TEST_CASE("liu bracket") {
    RatFun a = RatFun::variable(Variable::scalar("a"));
    RatFun q = RatFun::variable(Q);
    CHECK(liu_coefficient(0, RatFun::constant(1), a) == RatFun::constant(1));
    CHECK(liu_coefficient(1, xr(), a) == RatFun::constant(1) - q);

    // n <= 3, f = x^2: Liu bracket matches the Theorem coefficient up to the
    // displayed prefactor (1 - a q^{2n})/(q;q)_n
    auto coeffs = rational_newton_coeffs(xr().pow(2), liu_context(), 3);
    for (int n = 1; n <= 3; ++n) {
        RatFun prefactor =
            (RatFun::constant(1) - a * q.pow(2 * n)) / pochhammer(q, Q, n);
        CHECK(coeffs[static_cast<std::size_t>(n)] ==
              prefactor * liu_coefficient(n, xr().pow(2), a));
    }
}

TEST_CASE("q-derivative") {
    RatFun q = RatFun::variable(Q);
    CHECK(q_derivative(xr()) == RatFun::constant(1) - q);
    CHECK(q_derivative(RatFun::constant(4)).is_zero());
    CHECK(q_derivative(xr().pow(2)) == (RatFun::constant(1) - q.pow(2)) * xr());
}

TEST_CASE("bibasic coefficient") {
    InterpolationContext sym = InterpolationContext::symbolic();
    RatFun u = RatFun::variable(Variable::scalar("u"));
    RatFun v = RatFun::variable(Variable::scalar("v"));
    for (int k = 1; k <= 4; ++k) CHECK(bibasic_coefficient(k, v, v, sym).is_zero());

    RatFun k1 = (v - u) * (RatFun::constant(1) - xvar(2) * cvar(1)) /
                ((RatFun::constant(1) - v * xvar(1)) *
                 (RatFun::constant(1) - v * xvar(2)));
    CHECK(bibasic_coefficient(1, u, v, sym) == k1);
    CHECK_THROWS_AS(bibasic_coefficient(0, u, v, sym), IndexOutOfRange);
}
