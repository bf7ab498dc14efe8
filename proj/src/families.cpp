#include "ratinterp/families.hpp"

#include "ratinterp/errors.hpp"

namespace ratinterp {

RatFun FamilySpec::term(Family fam, int i) const {
    if (i < 1) throw IndexOutOfRange("family index must be >= 1");
    switch (kind_) {
        case Kind::Symbolic:
            return RatFun::variable(Variable::indexed(fam, i));
        case Kind::Geometric:
            return scale_ * ratio_.pow(i - 1);
        case Kind::Constant:
            return value_;
        case Kind::Explicit:
            if (static_cast<std::size_t>(i) > values_.size())
                throw IndexOutOfRange("explicit family has no term " + std::to_string(i));
            return values_[static_cast<std::size_t>(i) - 1];
    }
    throw Error("unreachable");
}

std::map<Variable, RatFun> InterpolationContext::bind(int depth) const {
    std::map<Variable, RatFun> binding;
    if (x_family.kind() != FamilySpec::Kind::Symbolic)
        for (int i = 1; i <= depth + 1; ++i) binding.emplace(Variable::x(i), x_family.term(Family::X, i));
    if (c_family.kind() != FamilySpec::Kind::Symbolic)
        for (int i = 1; i <= depth; ++i) binding.emplace(Variable::c(i), c_family.term(Family::C, i));
    return binding;
}

} // namespace ratinterp
