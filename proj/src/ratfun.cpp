#include "ratinterp/ratfun.hpp"

#include <algorithm>
#include <sstream>

#include "ratinterp/errors.hpp"

namespace ratinterp {

Polynomial RatFun::denominator_expanded() const {
    Polynomial d = Polynomial::constant(1);
    for (const auto& f : den_) d = d * f.poly.pow(static_cast<unsigned>(f.mult));
    return d;
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<Factor> keep;
    for (auto& f : den_) {
        if (f.mult == 0) continue;
        if (f.poly.is_zero()) throw DivisionByZeroSymbol("zero denominator factor");
        if (f.mult < 0) throw DivisionByZeroSymbol("negative factor multiplicity");
        // units of the Laurent ring fold straight into the numerator
        if (f.poly.is_single_term()) {
            const auto& [m, c] = *f.poly.terms().begin();
            num_ = num_.shift(m.pow(-f.mult)) * c.inverse().pow(f.mult);
            continue;
        }
        // strip monomial content and leading coefficient so equal factors
        // compare equal syntactically
        Monomial g = f.poly.monomial_content();
        if (!g.is_unit()) {
            f.poly = f.poly.shift(g.inverse());
            num_ = num_.shift(g.pow(-f.mult));
        }
        Rational lc = f.poly.leading_coefficient();
        if (!lc.is_one()) {
            f.poly = f.poly * lc.inverse();
            num_ = num_ * lc.inverse().pow(f.mult);
        }
        keep.push_back(std::move(f));
    }
    den_ = std::move(keep);

    // merge equal factors
    std::sort(den_.begin(), den_.end(), [](const Factor& a, const Factor& b) {
        return Polynomial::compare(a.poly, b.poly) < 0;
    });
    std::vector<Factor> merged;
    for (auto& f : den_) {
        if (!merged.empty() && Polynomial::compare(merged.back().poly, f.poly) == 0)
            merged.back().mult += f.mult;
        else
            merged.push_back(std::move(f));
    }
    den_ = std::move(merged);

    // cancel by trial exact division
    for (auto it = den_.begin(); it != den_.end();) {
        bool erased = false;
        while (it->mult > 0) {
            try {
                Polynomial q = num_.divexact(it->poly);
                num_ = std::move(q);
                --it->mult;
            } catch (const NonExactDivision&) {
                break;
            }
        }
        if (it->mult == 0) {
            it = den_.erase(it);
            erased = true;
        }
        if (!erased) ++it;
    }
}

RatFun RatFun::operator*(const RatFun& o) const {
    std::vector<Factor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return RatFun(num_ * o.num_, std::move(den));
}

RatFun RatFun::operator*(const Rational& c) const {
    if (c.is_zero()) return {};
    RatFun r = *this;
    r.num_ = r.num_ * c;
    return r;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    // lcm-style common denominator over syntactically equal factors
    std::vector<Factor> common = den_;
    for (const auto& g : o.den_) {
        auto it = std::find_if(common.begin(), common.end(), [&](const Factor& f) {
            return Polynomial::compare(f.poly, g.poly) == 0;
        });
        if (it == common.end())
            common.push_back(g);
        else
            it->mult = std::max(it->mult, g.mult);
    }
    auto cofactor = [&](const std::vector<Factor>& d) {
        Polynomial co = Polynomial::constant(1);
        for (const auto& f : common) {
            int have = 0;
            for (const auto& g : d)
                if (Polynomial::compare(f.poly, g.poly) == 0) have = g.mult;
            if (f.mult > have) co = co * f.poly.pow(static_cast<unsigned>(f.mult - have));
        }
        return co;
    };
    Polynomial n = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    return RatFun(std::move(n), std::move(common));
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw DivisionByZeroSymbol("inverse of zero rational function");
    Polynomial n = denominator_expanded();
    std::vector<Factor> den;
    den.push_back({num_, 1});
    return RatFun(std::move(n), std::move(den));
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFun r = RatFun(Polynomial::constant(1));
    RatFun b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool RatFun::operator==(const RatFun& o) const {
    return num_ * o.denominator_expanded() == o.num_ * denominator_expanded();
}

bool RatFun::contains(const Variable& v) const {
    if (num_.contains(v)) return true;
    for (const auto& f : den_)
        if (f.poly.contains(v)) return true;
    return false;
}

std::set<Variable> RatFun::variables() const {
    std::set<Variable> r = num_.variables();
    for (const auto& f : den_)
        for (const auto& v : f.poly.variables()) r.insert(v);
    return r;
}

RatFun RatFun::substitute(const std::map<Variable, RatFun>& binding) const {
    RatFun r = num_.substitute(binding);
    for (const auto& f : den_) {
        RatFun fs = f.poly.substitute(binding);
        if (fs.is_zero()) throw PoleHit("substitution zeroes denominator factor " + f.poly.str());
        r = r / fs.pow(f.mult);
    }
    return r;
}

Rational RatFun::eval(const std::map<Variable, Rational>& point) const {
    Rational v = num_.eval(point);
    for (const auto& f : den_) {
        Rational fv = f.poly.eval(point);
        if (fv.is_zero()) throw PoleHit("pole at denominator factor " + f.poly.str());
        v = v / fv.pow(f.mult);
    }
    return v;
}

RatFun RatFun::rename(const std::map<Variable, Variable>& how) const {
    RatFun r;
    r.num_ = num_.rename(how);
    for (const auto& f : den_) r.den_.push_back({f.poly.rename(how), f.mult});
    r.normalize();
    return r;
}

RatFun RatFun::swap_vars(const Variable& a, const Variable& b) const {
    return rename({{a, b}, {b, a}});
}

std::string RatFun::str() const {
    if (den_.empty()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ") / (";
    bool first = true;
    for (const auto& f : den_) {
        if (!first) os << " * ";
        first = false;
        os << "(" << f.poly.str() << ")";
        if (f.mult != 1) os << "^" << f.mult;
    }
    os << ")";
    return os.str();
}

// Polynomial::substitute lives here so polynomial.cpp does not depend on RatFun.
RatFun Polynomial::substitute(const std::map<Variable, RatFun>& binding) const {
    RatFun total;
    // cache powers per variable
    std::map<Variable, std::map<int, RatFun>> powers;
    for (const auto& [m, c] : terms_) {
        RatFun t = RatFun::constant(c);
        Monomial passthrough;
        for (const auto& [v, e] : m.exponents()) {
            auto it = binding.find(v);
            if (it == binding.end()) {
                passthrough = passthrough * Monomial(v, e);
                continue;
            }
            auto& cache = powers[v];
            auto pit = cache.find(e);
            if (pit == cache.end()) {
                if (e < 0 && it->second.is_zero())
                    throw DivisionByZeroSymbol("negative power of " + v.str() + " bound to zero");
                pit = cache.emplace(e, it->second.pow(e)).first;
            }
            t = t * pit->second;
        }
        if (!passthrough.is_unit()) t = t * RatFun(Polynomial::term(passthrough, Rational(1)));
        total = total + t;
    }
    return total;
}

} // namespace ratinterp
