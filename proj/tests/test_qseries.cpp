#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratinterp/qseries.hpp"
#include "test_util.hpp"

using namespace ratinterp;

namespace {

const Variable Q = Variable::scalar("q");
const RatFun q = RatFun::variable(Q);
const RatFun a = RatFun::variable(Variable::scalar("a"));

} // namespace

TEST_CASE("finite pochhammer") {
    CHECK(pochhammer(a, Q, 0) == RatFun::constant(1));
    CHECK(pochhammer(a, Q, 2) ==
          (RatFun::constant(1) - a) * (RatFun::constant(1) - a * q));
    CHECK(pochhammer(q.pow(-1), Q, 1) == RatFun::constant(1) - q.pow(-1));
    // negative length convention: (a;q)_{-n} = 1/(aq^{-n};q)_n
    for (int n = 1; n <= 4; ++n)
        CHECK(pochhammer(a, Q, -n) == pochhammer(a * q.pow(-n), Q, n).inverse());
}

TEST_CASE("pochhammer splitting (a;q)_{m+n} = (a;q)_m (aq^m;q)_n") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            CHECK(pochhammer(a, Q, m + n) ==
                  pochhammer(a, Q, m) * pochhammer(a * q.pow(m), Q, n));
}

TEST_CASE("multi-pochhammer is the product of individual symbols") {
    RatFun b = RatFun::variable(Variable::scalar("b"));
    // (a,b;q)_3 by definition of the notation
    RatFun direct = RatFun::constant(1);
    for (int j = 0; j < 3; ++j)
        direct = direct * (RatFun::constant(1) - a * q.pow(j)) *
                 (RatFun::constant(1) - b * q.pow(j));
    CHECK(direct == pochhammer(a, Q, 3) * pochhammer(b, Q, 3));
}

TEST_CASE("infinite pochhammer") {
    Variable beta = Variable::scalar("beta");
    Polynomial bq = Polynomial::term(Monomial(beta) * Monomial(Q), Rational(1));
    TruncatedSeries s = pochhammer_inf(bq, Q, 2);
    CHECK(s.coeff(0) == Polynomial::constant(1));
    CHECK(s.coeff(1) == -Polynomial::variable(beta));
    CHECK(s.coeff(2) == -Polynomial::variable(beta));

    CHECK(pochhammer_inf(Polynomial(), Q, 5) == TruncatedSeries::one(Q, 5));

    // (beta;q)_inf * 1/(beta;q)_inf = 1 to order 8 at rational beta
    Polynomial br = Polynomial::constant(Rational(2, 7));
    TruncatedSeries p = pochhammer_inf(br, Q, 8);
    CHECK(p * p.inverse() == TruncatedSeries::one(Q, 8));

    // truncation consistency
    CHECK(pochhammer_inf(bq, Q, 8).truncate(5) == pochhammer_inf(bq, Q, 5));

    Polynomial laurent = Polynomial::term(Monomial(Q, -1), Rational(1));
    CHECK_THROWS_AS(pochhammer_inf(laurent, Q, 3), TruncationUnreachable);
}

TEST_CASE("gaussian binomial") {
    CHECK(q_binomial(5, 0, Q) == Polynomial::constant(1));
    CHECK(q_binomial(2, 1, Q) == Polynomial::constant(1) + Polynomial::variable(Q));
    Polynomial q42 = Polynomial::constant(1);
    q42 += Polynomial::variable(Q);
    q42 += Polynomial::term(Monomial(Q, 2), Rational(2));
    q42 += Polynomial::term(Monomial(Q, 3), Rational(1));
    q42 += Polynomial::term(Monomial(Q, 4), Rational(1));
    CHECK(q_binomial(4, 2, Q) == q42);
    CHECK_THROWS_AS(q_binomial(3, 4, Q), IndexOutOfRange);
    CHECK_THROWS_AS(q_binomial(3, -1, Q), IndexOutOfRange);
}

TEST_CASE("q-Pascal recurrences and symmetry") {
    Polynomial qp = Polynomial::variable(Q);
    for (int n = 1; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            Polynomial b = q_binomial(n, k, Q);
            Polynomial r1 = q_binomial(n - 1, k, Q) +
                            q_binomial(n - 1, k - 1, Q).shift(Monomial(Q, n - k));
            Polynomial r2 = q_binomial(n - 1, k - 1, Q) +
                            q_binomial(n - 1, k, Q).shift(Monomial(Q, k));
            CHECK(b == r1);
            CHECK(b == r2);
            CHECK(b == q_binomial(n, n - k, Q));
        }
    }
}

TEST_CASE("basic hypergeometric series") {
    HypergeometricSpec any{{a}, {RatFun::variable(Variable::scalar("b"))}, Q, q};
    CHECK(basic_hypergeometric(any, 0) == RatFun::constant(1));

    // 2phi1 [q^{-1}, c; a; q, aq/c] = (a/c;q)_1 / (a;q)_1 at rationals
    Rational av(1, 3), cv(1, 5), qv(1, 2);
    RatFun ar = RatFun::constant(av), cr = RatFun::constant(cv);
    HypergeometricSpec vdm{{RatFun::constant(1) / q, cr},
                           {ar},
                           Q,
                           ar * q / cr};
    Rational lhs = basic_hypergeometric(vdm, 1).eval({{Q, qv}});
    Rational rhs = (Rational(1) - av / cv) / (Rational(1) - av);
    CHECK(lhs == rhs);

    // Sears 3phi2 at n=1, rational parameters
    Rational aa(1, 2), bb(1, 3), dd(1, 5), ee(1, 7), qq(1, 4);
    auto C = [](const Rational& r) { return RatFun::constant(r); };
    HypergeometricSpec left{{RatFun::constant(1) / q, C(aa), C(bb)},
                            {C(dd), C(ee)},
                            Q,
                            C(dd * ee / (aa * bb)) * q};
    HypergeometricSpec right{{RatFun::constant(1) / q, C(aa), C(dd / bb)},
                             {C(dd), C(aa / ee)},
                             Q,
                             q};
    Rational l = basic_hypergeometric(left, 1).eval({{Q, qq}});
    Rational pre = (Rational(1) - ee / aa) / (Rational(1) - ee);
    Rational r = pre * basic_hypergeometric(right, 1).eval({{Q, qq}});
    CHECK(l == r);
}
