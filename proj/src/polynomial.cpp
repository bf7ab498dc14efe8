#include "ratinterp/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ratinterp/errors.hpp"
#include "ratinterp/ratfun.hpp"

namespace ratinterp {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (const auto& [v, e] : o.exps_) {
        auto it = r.exps_.find(v);
        if (it == r.exps_.end()) {
            r.exps_.emplace(v, e);
        } else {
            it->second += e;
            if (it->second == 0) r.exps_.erase(it);
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (const auto& [v, e] : exps_) r.exps_.emplace(v, -e);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::pow(int e) const {
    Monomial r;
    if (e == 0) return r;
    for (const auto& [v, ex] : exps_) r.exps_.emplace(v, ex * e);
    return r;
}

bool Monomial::operator<(const Monomial& o) const {
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
        if (a == exps_.end()) {
            // this has exponent 0 on b's variable
            if (b->second != 0) return b->second > 0;
            ++b;
            continue;
        }
        if (b == o.exps_.end()) {
            if (a->second != 0) return a->second < 0;
            ++a;
            continue;
        }
        if (a->first < b->first) {
            // o has exponent 0 here
            return a->second < 0;
        }
        if (b->first < a->first) {
            return b->second > 0;
        }
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return false;
}

std::string Monomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << v.str();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Polynomial Polynomial::constant(Rational c) { return term(Monomial(), std::move(c)); }

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r = constant(1);
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::shift(const Monomial& m) const {
    Polynomial r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

const Rational& Polynomial::leading_coefficient() const { return std::prev(terms_.end())->second; }
const Monomial& Polynomial::leading_monomial() const { return std::prev(terms_.end())->first; }

Polynomial Polynomial::divexact(const Polynomial& d) const {
    if (d.is_zero()) throw NonExactDivision("division by zero polynomial");
    if (is_zero()) return {};
    if (d.is_single_term()) {
        const auto& [dm, dc] = *d.terms_.begin();
        Polynomial q;
        Rational inv = dc.inverse();
        Monomial im = dm.inverse();
        for (const auto& [m, c] : terms_) q.terms_.emplace(m * im, c * inv);
        return q;
    }

    // Quotient-exponent box: any quotient monomial must fit between the
    // extremes allowed by the supports of p and d; stepping outside means the
    // division is not exact (guards against Laurent series expansion).
    std::map<Variable, std::pair<int, int>> box;  // var -> (min, max)
    {
        std::set<Variable> vars = variables();
        for (const auto& v : d.variables()) vars.insert(v);
        for (const auto& v : vars) {
            int lo = min_degree(v) - d.max_degree(v);
            int hi = max_degree(v) - d.min_degree(v);
            box.emplace(v, std::make_pair(lo, hi));
        }
    }

    Polynomial p = *this;
    Polynomial q;
    const Monomial& dlm = d.leading_monomial();
    const Rational& dlc = d.leading_coefficient();
    while (!p.is_zero()) {
        Monomial qm = p.leading_monomial() / dlm;
        for (const auto& [v, e] : qm.exponents()) {
            auto it = box.find(v);
            if (it == box.end() || e < it->second.first || e > it->second.second)
                throw NonExactDivision("no exact quotient");
        }
        Rational qc = p.leading_coefficient() / dlc;
        q.add_term(qm, qc);
        p -= d.shift(qm) * qc;
    }
    return q;
}

int Polynomial::compare(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first < ib->first) return -1;
        if (ib->first < ia->first) return 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    return 0;
}

bool Polynomial::contains(const Variable& v) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent(v) != 0) return true;
    return false;
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> r;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) r.insert(v);
    return r;
}

int Polynomial::max_degree(const Variable& v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (first || e > d) d = e;
        first = false;
    }
    return d;
}

int Polynomial::min_degree(const Variable& v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (first || e < d) d = e;
        first = false;
    }
    return d;
}

int Polynomial::total_degree(Family fam) const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int t = 0;
        for (const auto& [v, e] : m.exponents())
            if (v.family() == fam) t += e;
        d = std::max(d, t);
    }
    return d;
}

Polynomial Polynomial::rename(const std::map<Variable, Variable>& how) const {
    Polynomial r;
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (const auto& [v, e] : m.exponents()) {
            auto it = how.find(v);
            nm = nm * Monomial(it == how.end() ? v : it->second, e);
        }
        r.add_term(nm, c);
    }
    return r;
}

Polynomial Polynomial::swap_vars(const Variable& a, const Variable& b) const {
    return rename({{a, b}, {b, a}});
}

Monomial Polynomial::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial r;
    bool first = true;
    std::map<Variable, int> mins;
    for (const auto& [m, c] : terms_) {
        if (first) {
            mins.insert(m.exponents().begin(), m.exponents().end());
            first = false;
            continue;
        }
        // keep only variables present so far, lowering to min (absent = 0)
        for (auto it = mins.begin(); it != mins.end();) {
            int e = m.exponent(it->first);
            it->second = std::min(it->second, e);
            if (it->second == 0)
                it = mins.erase(it);
            else
                ++it;
        }
        // a variable with negative exponent here but absent from mins
        for (const auto& [v, e] : m.exponents())
            if (e < 0 && !mins.count(v)) mins[v] = e;
    }
    for (const auto& [v, e] : mins)
        if (e != 0) r = r * Monomial(v, e);
    return r;
}

Rational Polynomial::eval(const std::map<Variable, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = point.find(v);
            if (it == point.end()) throw MissingBinding("unbound variable " + v.str());
            if (e < 0 && it->second.is_zero())
                throw PoleHit("negative power of " + v.str() + " at zero");
            t *= it->second.pow(e);
        }
        total += t;
    }
    return total;
}

std::pair<int, std::vector<Polynomial>> Polynomial::split_by(const Variable& v) const {
    if (is_zero()) return {0, {Polynomial{}}};
    int lo = min_degree(v), hi = max_degree(v);
    std::vector<Polynomial> out(hi - lo + 1);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        out[e - lo].add_term(m / Monomial(v, e), c);
    }
    return {lo, std::move(out)};
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest monomial first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << ac.str();
        } else if (ac.is_one()) {
            os << m.str();
        } else {
            os << ac.str() << "*" << m.str();
        }
    }
    return os.str();
}

} // namespace ratinterp
