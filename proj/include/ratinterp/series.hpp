#pragma once

#include <vector>

#include "ratinterp/ratfun.hpp"

namespace ratinterp {

// Formal power series in one distinguished scalar variable, truncated at a
// fixed order. Coefficients are polynomials in the remaining variables and
// never mention the series variable.
class TruncatedSeries {
public:
    TruncatedSeries(Variable var, int order)
        : var_(std::move(var)), coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw IndexOutOfRange("negative series order");
    }
    static TruncatedSeries one(const Variable& var, int order);
    // Throws TruncationUnreachable when p carries negative powers of var.
    static TruncatedSeries from_polynomial(const Polynomial& p, const Variable& var, int order);
    static TruncatedSeries from_ratfun(const RatFun& f, const Variable& var, int order);

    const Variable& variable() const { return var_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Polynomial& coeff(int k) const;
    void set_coeff(int k, Polynomial p);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Polynomial& p) const;
    TruncatedSeries operator*(const Rational& c) const;
    // Throws NonInvertibleConstantTerm unless coeff(0) is a unit (nonzero
    // rational constant or single Laurent monomial).
    TruncatedSeries inverse() const;
    TruncatedSeries truncate(int new_order) const;

    bool operator==(const TruncatedSeries& o) const;
    bool is_zero() const;

    std::string str() const;

private:
    void check_same(const TruncatedSeries& o) const;
    Variable var_;
    std::vector<Polynomial> coeffs_;
};

} // namespace ratinterp
