#include "ratinterp/divdiff.hpp"

#include "ratinterp/errors.hpp"

namespace ratinterp {

RatFun apply_divdiff(const RatFun& f, int i, Family fam) {
    if (i < 1) throw IndexOutOfRange("divided-difference index must be >= 1");
    Variable vi = Variable::indexed(fam, i);
    Variable vj = Variable::indexed(fam, i + 1);

    // Split denominator factors into those fixed by the swap and those moved;
    // the common denominator S * T * T^s is swap-invariant as a multiset, so
    // the combined numerator is antisymmetric and the division below is exact.
    std::vector<RatFun::Factor> shared, moved;
    for (const auto& fac : f.denominator_factors()) {
        Polynomial swapped = fac.poly.swap_vars(vi, vj);
        if (swapped == fac.poly)
            shared.push_back(fac);
        else
            moved.push_back(fac);
    }
    Polynomial prod_moved = Polynomial::constant(1);
    Polynomial prod_moved_s = Polynomial::constant(1);
    for (const auto& fac : moved) {
        prod_moved = prod_moved * fac.poly.pow(static_cast<unsigned>(fac.mult));
        prod_moved_s =
            prod_moved_s * fac.poly.swap_vars(vi, vj).pow(static_cast<unsigned>(fac.mult));
    }

    Polynomial n = f.numerator();
    Polynomial ns = n.swap_vars(vi, vj);
    Polynomial combined = n * prod_moved_s - ns * prod_moved;
    Polynomial linear = Polynomial::variable(vi) - Polynomial::variable(vj);
    Polynomial quotient = combined.divexact(linear);  // exact by antisymmetry

    std::vector<RatFun::Factor> den = std::move(shared);
    for (const auto& fac : moved) {
        den.push_back(fac);
        den.push_back({fac.poly.swap_vars(vi, vj), fac.mult});
    }
    return RatFun(std::move(quotient), std::move(den));
}

RatFun apply_chain(const RatFun& f, int from, int to, Family fam) {
    RatFun g = f;
    for (int i = from; i <= to; ++i) g = apply_divdiff(g, i, fam);
    return g;
}

RatFun specialize_b_to_x(const RatFun& f, int max_index) {
    std::map<Variable, RatFun> binding;
    for (int j = 1; j <= max_index; ++j)
        binding.emplace(Variable::b(j), RatFun::variable(Variable::x(j)));
    return f.substitute(binding);
}

Rational lemma1_check(int n, int i) {
    if (n < 0 || i < 0) throw IndexOutOfRange("lemma1_check needs nonnegative n, i");
    Polynomial y = Polynomial::constant(1);
    Polynomial b1 = Polynomial::variable(Variable::b(1));
    for (int j = 1; j <= n; ++j) y = y * (b1 - Polynomial::variable(Variable::x(j)));
    RatFun g(std::move(y));
    if (i >= 1) g = apply_chain(g, 1, i, Family::B);
    RatFun spec = specialize_b_to_x(g, i + 1);
    if (!spec.is_constant()) throw Error("lemma1_check: non-constant specialization");
    return spec.constant_value();
}

} // namespace ratinterp
