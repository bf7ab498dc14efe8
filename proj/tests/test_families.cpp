#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratinterp/errors.hpp"
#include "ratinterp/families.hpp"

using namespace ratinterp;

namespace {

const RatFun a = RatFun::variable(Variable::scalar("a"));
const RatFun p = RatFun::variable(Variable::scalar("p"));
const RatFun q = RatFun::variable(Variable::scalar("q"));

} // namespace

TEST_CASE("family terms") {
    FamilySpec geo = FamilySpec::geometric(a * q, q);
    CHECK(geo.term(Family::X, 3) == a * q.pow(3));
    CHECK(geo.term(Family::X, 1) == a * q);

    FamilySpec zero = FamilySpec::constant(RatFun::constant(0));
    CHECK(zero.term(Family::C, 1).is_zero());
    CHECK(zero.term(Family::C, 17).is_zero());

    FamilySpec sym = FamilySpec::symbolic();
    CHECK(sym.term(Family::X, 2) == RatFun::variable(Variable::x(2)));
    CHECK(sym.term(Family::C, 5) == RatFun::variable(Variable::c(5)));

    FamilySpec ex = FamilySpec::explicit_list({RatFun::constant(3), q});
    CHECK(ex.term(Family::X, 2) == q);
    CHECK_THROWS_AS(ex.term(Family::X, 3), IndexOutOfRange);
    CHECK_THROWS_AS(geo.term(Family::X, 0), IndexOutOfRange);
}

TEST_CASE("geometric recurrence term(i+1) = ratio * term(i)") {
    FamilySpec geo = FamilySpec::geometric(a * q, q);
    for (int i = 1; i <= 10; ++i)
        CHECK(geo.term(Family::X, i + 1) == q * geo.term(Family::X, i));
}

TEST_CASE("context binding") {
    // Newton: C = 0, X passes through symbolically.
    InterpolationContext newton = InterpolationContext::newton();
    auto b = newton.bind(2);
    CHECK(b.at(Variable::c(1)).is_zero());
    CHECK(b.at(Variable::c(2)).is_zero());
    CHECK(b.find(Variable::x(1)) == b.end());  // symbolic: passes through

    // Liu: X = {aq, aq^2, ...}, C = {1, q, q^2, ...}.
    InterpolationContext liu{FamilySpec::geometric(a * q, q),
                             FamilySpec::geometric(RatFun::constant(1), q)};
    auto lb = liu.bind(1);
    CHECK(lb.at(Variable::x(1)) == a * q);
    CHECK(lb.at(Variable::x(2)) == a * q.pow(2));
    CHECK(lb.at(Variable::c(1)) == RatFun::constant(1));

    // Gasper: X = {1, q, q^2, ...}, C = {ap, ap^2, ...}.
    InterpolationContext gasper{FamilySpec::geometric(RatFun::constant(1), q),
                                FamilySpec::geometric(a * p, p)};
    auto gb = gasper.bind(1);
    CHECK(gb.at(Variable::x(1)) == RatFun::constant(1));
    CHECK(gb.at(Variable::x(2)) == q);
    CHECK(gb.at(Variable::c(1)) == a * p);
}

TEST_CASE("symbolic-then-substitute equals direct materialization") {
    InterpolationContext sym = InterpolationContext::symbolic();
    InterpolationContext geo{FamilySpec::geometric(a * q, q),
                             FamilySpec::geometric(RatFun::constant(1), q)};
    for (int depth = 0; depth <= 6; ++depth) {
        auto binding = geo.bind(depth);
        for (int i = 1; i <= depth + 1; ++i) {
            RatFun via_sub = sym.x_term(i).substitute(binding);
            CHECK(via_sub == geo.x_term(i));
        }
        for (int i = 1; i <= depth; ++i)
            CHECK(sym.c_term(i).substitute(binding) == geo.c_term(i));
    }
}
