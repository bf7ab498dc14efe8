#pragma once

#include <map>
#include <vector>

#include "ratinterp/ratfun.hpp"

namespace ratinterp {

// Closed-form rule for an infinite indexed family of values. Symbolic leaves
// the indexed variables untouched; Geometric produces scale*ratio^(i-1);
// Explicit is a finite ad-hoc list for tests.
class FamilySpec {
public:
    enum class Kind { Symbolic, Geometric, Constant, Explicit };

    static FamilySpec symbolic() { return FamilySpec(Kind::Symbolic); }
    static FamilySpec geometric(RatFun scale, RatFun ratio) {
        FamilySpec s(Kind::Geometric);
        s.scale_ = std::move(scale);
        s.ratio_ = std::move(ratio);
        return s;
    }
    static FamilySpec constant(RatFun value) {
        FamilySpec s(Kind::Constant);
        s.value_ = std::move(value);
        return s;
    }
    static FamilySpec explicit_list(std::vector<RatFun> values) {
        FamilySpec s(Kind::Explicit);
        s.values_ = std::move(values);
        return s;
    }

    Kind kind() const { return kind_; }

    // i-th member, i >= 1. For Symbolic this is the indexed variable of the
    // given family itself.
    RatFun term(Family fam, int i) const;

private:
    explicit FamilySpec(Kind k) : kind_(k) {}
    Kind kind_;
    RatFun scale_, ratio_, value_;
    std::vector<RatFun> values_;
};

// The (X, C) pair of the interpolation theorem.
struct InterpolationContext {
    FamilySpec x_family;
    FamilySpec c_family;

    // Binding x_1..x_{depth+1}, c_1..c_depth for a depth-k computation.
    // Symbolic entries are omitted (the variables pass through).
    std::map<Variable, RatFun> bind(int depth) const;

    RatFun x_term(int i) const { return x_family.term(Family::X, i); }
    RatFun c_term(int i) const { return c_family.term(Family::C, i); }

    static InterpolationContext symbolic() {
        return {FamilySpec::symbolic(), FamilySpec::symbolic()};
    }
    // C = {0,0,...}: classical Newton interpolation.
    static InterpolationContext newton() {
        return {FamilySpec::symbolic(), FamilySpec::constant(RatFun::constant(0))};
    }
};

} // namespace ratinterp
