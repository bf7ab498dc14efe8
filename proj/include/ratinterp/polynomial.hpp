#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ratinterp/rational.hpp"
#include "ratinterp/variable.hpp"

namespace ratinterp {

class RatFun;

// Laurent monomial: finite association Variable -> nonzero integer exponent.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Variable v, int e = 1) {
        if (e != 0) exps_.emplace(std::move(v), e);
    }

    bool is_unit() const { return exps_.empty(); }
    int exponent(const Variable& v) const {
        auto it = exps_.find(v);
        return it == exps_.end() ? 0 : it->second;
    }
    const std::map<Variable, int>& exponents() const { return exps_; }

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const;

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    // Lex order on exponent vectors (variables in canonical order, absent = 0);
    // compatible with multiplication, which exact division relies on.
    bool operator<(const Monomial& o) const;

    std::string str() const;

private:
    std::map<Variable, int> exps_;
};

// Sparse Laurent polynomial over Rational.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial constant(Rational c);
    static Polynomial constant(long c) { return constant(Rational(c)); }
    static Polynomial variable(const Variable& v) { return term(Monomial(v), Rational(1)); }
    static Polynomial term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_single_term() const { return terms_.size() == 1; }
    // Requires is_constant().
    Rational constant_value() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial pow(unsigned e) const;

    // Exact division in the Laurent ring; throws NonExactDivision.
    Polynomial divexact(const Polynomial& d) const;

    // Multiply every term by a monomial (a unit of the Laurent ring).
    Polynomial shift(const Monomial& m) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    // Deterministic total order for canonical sorting of denominator factors.
    static int compare(const Polynomial& a, const Polynomial& b);

    bool contains(const Variable& v) const;
    std::set<Variable> variables() const;
    int max_degree(const Variable& v) const;  // 0 when absent
    int min_degree(const Variable& v) const;  // 0 when absent
    // Total degree over the given family (used for degree-drop checks).
    int total_degree(Family fam) const;

    // Rename variables simultaneously (a <-> b swap or injective renaming).
    Polynomial rename(const std::map<Variable, Variable>& how) const;
    Polynomial swap_vars(const Variable& a, const Variable& b) const;

    // Common monomial factor of all terms (per-variable min exponent).
    Monomial monomial_content() const;
    // Coefficient of the largest monomial; requires nonzero.
    const Rational& leading_coefficient() const;
    const Monomial& leading_monomial() const;

    RatFun substitute(const std::map<Variable, RatFun>& binding) const;
    Rational eval(const std::map<Variable, Rational>& point) const;

    // Coefficients of powers of v, treating the rest symbolically.
    // split_by(v)[k] is the coefficient of v^(k + offset); offset = min degree.
    std::pair<int, std::vector<Polynomial>> split_by(const Variable& v) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace ratinterp
