#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ratinterp/series.hpp"
#include "ratinterp/symfun.hpp"
#include "test_util.hpp"

using namespace ratinterp;

namespace {

RatFun xvar(int i) { return RatFun::variable(Variable::x(i)); }

Alphabet letters(int from, int to) {
    Alphabet a;
    for (int i = from; i <= to; ++i) a.push_back(xvar(i));
    return a;
}

} // namespace

TEST_CASE("elementary basics") {
    Alphabet a = letters(1, 2);
    CHECK(elementary(0, a) == RatFun::constant(1));
    CHECK(elementary(0, Alphabet{}) == RatFun::constant(1));
    CHECK(elementary(1, a) == xvar(1) + xvar(2));
    CHECK(elementary(2, a) == xvar(1) * xvar(2));
    CHECK(elementary(3, a).is_zero());
    CHECK(elementary(-1, a).is_zero());
}

TEST_CASE("complete basics") {
    Alphabet a = letters(1, 2);
    CHECK(complete(0, a) == RatFun::constant(1));
    CHECK(complete(-2, a).is_zero());
    CHECK(complete(1, a) == elementary(1, a));
    RatFun s2 = xvar(1) * xvar(1) + xvar(1) * xvar(2) + xvar(2) * xvar(2);
    CHECK(complete(2, a) == s2);
}

TEST_CASE("generating function duality: sum e_i(A) t^i * sum S_j(-A) t^j = 1") {
    Alphabet a = letters(1, 3);
    Alphabet neg;
    for (const auto& v : a) neg.push_back(-v);
    for (int n = 1; n <= 6; ++n) {
        RatFun conv;
        for (int i = 0; i <= n; ++i) conv = conv + elementary(i, a) * complete(n - i, neg);
        CHECK(conv.is_zero());
    }
}

TEST_CASE("symmetry under permuting the alphabet") {
    testutil::Rng rng(21);
    Alphabet base = letters(1, 4);
    for (int t = 0; t < 10; ++t) {
        Alphabet shuffled = base;
        for (std::size_t i = shuffled.size(); i > 1; --i)
            std::swap(shuffled[i - 1], shuffled[static_cast<std::size_t>(
                                           rng.range(0, static_cast<long>(i) - 1))]);
        for (int i = 0; i <= 4; ++i) {
            CHECK(elementary(i, base) == elementary(i, shuffled));
            CHECK(complete(i, base) == complete(i, shuffled));
        }
    }
}

TEST_CASE("schur determinants") {
    Alphabet a = letters(1, 3);
    CHECK(schur_multi({3}, {a}) == complete(3, a));
    CHECK(schur_multi({1, 1}, {a, a}) == elementary(2, a));
    for (int j = 1; j <= 3; ++j) {
        std::vector<int> column(static_cast<std::size_t>(j), 1);
        CHECK(schur_multi(column, std::vector<Alphabet>(static_cast<std::size_t>(j), a)) ==
              elementary(j, a));
    }
    // two identical columns force a vanishing determinant: adjacent columns
    // carry the same row indices when lambda_{j+1} = lambda_j - 1
    CHECK(schur_multi({2, 1}, {a, a}).is_zero());
    CHECK(schur_multi({3, 2}, {a, a}).is_zero());
}

TEST_CASE("flag identity catalogue") {
    std::vector<std::vector<int>> lambdas{{}, {1}, {2}, {1, 1}};
    for (const auto& lambda : lambdas)
        for (int r = 0; r <= 3; ++r)
            for (int m = 1; m <= 4; ++m)
                CHECK(check_flag_identity(lambda, r, m));
}
