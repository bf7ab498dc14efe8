#include "ratinterp/series.hpp"

#include <sstream>

#include "ratinterp/errors.hpp"

namespace ratinterp {

TruncatedSeries TruncatedSeries::one(const Variable& var, int order) {
    TruncatedSeries s(var, order);
    s.coeffs_[0] = Polynomial::constant(1);
    return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, const Variable& var,
                                                 int order) {
    TruncatedSeries s(var, order);
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(var);
        if (e < 0)
            throw TruncationUnreachable("negative power of " + var.str() +
                                        " inside a truncated series");
        if (e > order) continue;
        s.coeffs_[e] += Polynomial::term(m / Monomial(var, e), c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_ratfun(const RatFun& f, const Variable& var, int order) {
    TruncatedSeries s = from_polynomial(f.numerator(), var, order);
    for (const auto& fac : f.denominator_factors()) {
        TruncatedSeries inv = from_polynomial(fac.poly, var, order).inverse();
        for (int k = 0; k < fac.mult; ++k) s = s * inv;
    }
    return s;
}

const Polynomial& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw IndexOutOfRange("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, Polynomial p) {
    if (k < 0 || k > order()) throw IndexOutOfRange("series coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = std::move(p);
}

void TruncatedSeries::check_same(const TruncatedSeries& o) const {
    if (var_ != o.var_ || order() != o.order())
        throw Error("series variable/order mismatch");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_same(o);
    TruncatedSeries r = *this;
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] += o.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_same(o);
    TruncatedSeries r = *this;
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] -= o.coeffs_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same(o);
    TruncatedSeries r(var_, order());
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Polynomial& p) const {
    TruncatedSeries r(var_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * p;
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(var_, order());
    for (int k = 0; k <= order(); ++k) r.coeffs_[k] = coeffs_[k] * c;
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Polynomial& c0 = coeffs_[0];
    if (c0.is_zero() || !c0.is_single_term())
        throw NonInvertibleConstantTerm("series constant term is not a unit: " + c0.str());
    const auto& [m0, a0] = *c0.terms().begin();
    Polynomial inv0 = Polynomial::term(m0.inverse(), a0.inverse());
    TruncatedSeries r(var_, order());
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        Polynomial acc;
        for (int j = 1; j <= n; ++j) acc += coeffs_[j] * r.coeffs_[n - j];
        r.coeffs_[n] = -(acc * inv0);
    }
    return r;
}

TruncatedSeries TruncatedSeries::truncate(int new_order) const {
    if (new_order > order()) throw IndexOutOfRange("cannot extend a truncated series");
    TruncatedSeries r(var_, new_order);
    for (int k = 0; k <= new_order; ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return var_ == o.var_ && coeffs_ == o.coeffs_;
}

bool TruncatedSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::string TruncatedSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k > 0) os << "*" << var_.str() << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << var_.str() << "^" << order() + 1 << ")";
    return os.str();
}

} // namespace ratinterp
