#include "ratinterp/identities.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ratinterp/errors.hpp"
#include "ratinterp/qseries.hpp"
#include "ratinterp/symfun.hpp"

namespace ratinterp {

namespace {

const Variable kQ = Variable::scalar("q");
const Variable kP = Variable::scalar("p");
const Variable kBeta = Variable::scalar("beta");

Rational poch_rat(const Rational& base, const Rational& q, int n) {
    Rational r(1);
    if (n >= 0) {
        for (int j = 0; j < n; ++j) r *= Rational(1) - base * q.pow(j);
        return r;
    }
    for (int j = 1; j <= -n; ++j) r *= Rational(1) - base * q.pow(-j);
    return r.inverse();
}

// Seeded sampler; hand-rolled reduction so output is stable across platforms.
class RationalSampler {
public:
    explicit RationalSampler(unsigned long long seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    Rational next() {
        long num = static_cast<long>(next_u64() % 19) - 9;  // -9..9
        if (num == 0) num = 1;
        long den = static_cast<long>(next_u64() % 9) + 1;  // 1..9
        return Rational(num, den);
    }
    template <typename Pred>
    Rational next_where(Pred ok) {
        for (int tries = 0; tries < 100; ++tries) {
            Rational r = next();
            if (ok(r)) return r;
        }
        throw PoleHit("pole-avoiding rejection sampling exceeded 100 retries");
    }

private:
    unsigned long long next_u64() {
        // splitmix64
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    unsigned long long state_;
};

RatFun rat(long n, long d = 1) { return RatFun::constant(Rational(n, d)); }
RatFun var(const Variable& v) { return RatFun::variable(v); }

VerificationReport make_report(std::string name, std::string mode, int order_or_n) {
    VerificationReport r;
    r.identity = std::move(name);
    r.mode = std::move(mode);
    r.order_or_n = order_or_n;
    r.verified = true;
    return r;
}

void fail(VerificationReport& r, const std::string& witness) {
    if (r.verified) {
        r.verified = false;
        r.witness = witness;
    }
}

std::string rat_str(const Rational& r) { return r.str(); }

// Series of 1/(base;q)_n for a polynomial base whose (q-free) constant part
// is series-invertible.
TruncatedSeries inv_poch_series(const Polynomial& base, int n, int order) {
    return TruncatedSeries::from_polynomial(pochhammer_poly(base, kQ, n), kQ, order).inverse();
}

} // namespace

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["mode"] = mode;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : parameters) params[k] = v;
    j["parameters"] = params;
    j["order_or_n"] = order_or_n;
    j["status"] = verified ? "verified" : "failed";
    if (witness) j["witness"] = *witness;
    return j.dump(2);
}

std::string VerificationReport::summary_line() const {
    std::ostringstream os;
    os << identity << " [" << mode << "]";
    for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
    os << " order_or_n=" << order_or_n << " : " << (verified ? "verified" : "FAILED");
    if (witness) os << " (witness: " << *witness << ")";
    return os.str();
}

RatFun extraction_bracket(int k, int n) {
    if (k < 0 || n < 0) throw IndexOutOfRange("extraction_bracket needs nonnegative k, n");
    RatFun b1 = var(Variable::b(1));
    RatFun f = RatFun::constant(1);
    for (int j = 1; j <= n; ++j) f = f * (b1 - var(Variable::x(j)));
    for (int j = 1; j <= n; ++j) f = f / (RatFun::constant(1) - b1 * var(Variable::c(j)));
    for (int j = 1; j <= k - 1; ++j) f = f * (RatFun::constant(1) - b1 * var(Variable::c(j)));
    if (k >= 1) f = apply_chain(f, 1, k, Family::B);
    return specialize_b_to_x(f, k + 1);
}

VerificationReport verify_q_vandermonde(int n_max, const VerifyOptions& opt) {
    VerificationReport rep = make_report("q_vandermonde", "rational_point", n_max);
    rep.parameters["samples"] = std::to_string(opt.samples);
    rep.parameters["seed"] = std::to_string(opt.seed);
    RationalSampler rng(opt.seed);

    for (int n = 0; n <= n_max && rep.verified; ++n) {
        for (int s = 0; s < opt.samples && rep.verified; ++s) {
            Rational q = rng.next_where([](const Rational& r) {
                return !r.is_zero() && r != Rational(1) && r != Rational(-1);
            });
            Rational a = rng.next_where([&](const Rational& r) {
                return !poch_rat(r, q, n).is_zero();
            });
            Rational c = rng.next_where([&](const Rational& r) { return !r.is_zero(); });

            Rational lhs = poch_rat(a / c, q, n) / poch_rat(a, q, n);
            Rational sum1(0), sum2(0);
            for (int k = 0; k <= n; ++k) {
                Rational common = poch_rat(q.pow(-n), q, k) * poch_rat(c, q, k) /
                                  (poch_rat(q, q, k) * poch_rat(a, q, k));
                sum1 += common * (a * q.pow(n) / c).pow(k);
                sum2 += common * q.pow(k);
            }
            if (lhs != sum1)
                fail(rep, "first form differs at n=" + std::to_string(n) + " sample " +
                              std::to_string(s));
            if (lhs * c.pow(n) != sum2)
                fail(rep, "second form differs at n=" + std::to_string(n) + " sample " +
                              std::to_string(s));
        }
    }

    // Theorem-pipeline re-derivation: f = (x;q)_n, X = {aq, aq^2, ...}, C = 0.
    RatFun a = var(Variable::scalar("a"));
    RatFun q = var(kQ);
    InterpolationContext ctx{FamilySpec::geometric(a * q, q),
                             FamilySpec::constant(RatFun::constant(0))};
    for (int n = 0; n <= std::min(n_max, 4) && rep.verified; ++n) {
        RatFun f = pochhammer(var(interp_var()), kQ, n);
        std::vector<RatFun> coeffs = rational_newton_coeffs(f, ctx, n);
        for (int k = 0; k <= n; ++k) {
            RatFun closed = RatFun(q_binomial(n, k, kQ)) * q.pow(k * (k - 1) / 2) *
                            pochhammer(a * q.pow(k + 1), kQ, n - k);
            if (k % 2 == 1) closed = -closed;
            if (!(coeffs[static_cast<std::size_t>(k)] == closed)) {
                fail(rep, "pipeline coefficient mismatch at n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
                break;
            }
        }
    }
    return rep;
}

namespace {

// Jackson right side, rearranged so every series inversion has a unit
// constant term even when beta stays symbolic: each term carries
// (a beta x q^n;q)_inf in place of (a beta x;q)_inf/(a beta x;q)_n, and the
// comparison target is (beta;q)_inf.
TruncatedSeries jackson_rhs_times_abx_inf(const Polynomial& beta_p, const Rational& a,
                                          const Rational& x, int order) {
    TruncatedSeries total(kQ, order);
    Rational ax = a * x;
    for (int n = 0; n * (n - 1) <= order; ++n) {
        Polynomial numer = Polynomial::constant(1) - beta_p.shift(Monomial(kQ, 2 * n));
        numer = numer * pochhammer_poly(Polynomial::term(Monomial(kQ, 1), ax.inverse()), kQ, n);
        numer = numer * pochhammer_poly(beta_p, kQ, n);
        // (a beta x)^n q^{n(n-1)}
        numer = numer * beta_p.pow(static_cast<unsigned>(n));
        numer = numer * Polynomial::term(Monomial(kQ, n * (n - 1)), ax.pow(n));
        TruncatedSeries term = TruncatedSeries::from_polynomial(numer, kQ, order);
        term = term * inv_poch_series(Polynomial::term(Monomial(kQ, 1), Rational(1)), n, order);
        Polynomial abxqn = beta_p.shift(Monomial(kQ, n)) * ax;
        term = term * pochhammer_inf(abxqn, kQ, order);
        total = total + term;
    }
    return total;
}

} // namespace

VerificationReport verify_jackson(int order, const Rational& a, const Rational& x,
                                  const Rational& beta) {
    VerificationReport rep = make_report("jackson", "rational_point", order);
    rep.parameters["a"] = rat_str(a);
    rep.parameters["x"] = rat_str(x);
    rep.parameters["beta"] = rat_str(beta);
    Rational abx = a * beta * x;
    if (abx == Rational(1)) throw PoleHit("1 - a*beta*x vanishes");

    // direct form: (beta;q)_inf / (a beta x;q)_inf vs the displayed sum
    Polynomial beta_p = Polynomial::constant(beta);
    Polynomial abx_p = Polynomial::constant(abx);
    TruncatedSeries lhs = pochhammer_inf(beta_p, kQ, order) *
                          pochhammer_inf(abx_p, kQ, order).inverse();
    TruncatedSeries rhs(kQ, order);
    Rational ax = a * x;
    for (int n = 0; n * (n - 1) <= order; ++n) {
        Polynomial numer =
            Polynomial::constant(1) - Polynomial::term(Monomial(kQ, 2 * n), beta);
        numer = numer * pochhammer_poly(Polynomial::term(Monomial(kQ, 1), ax.inverse()), kQ, n);
        numer = numer * pochhammer_poly(Polynomial::constant(beta), kQ, n);
        numer = numer * Polynomial::term(Monomial(kQ, n * (n - 1)), abx.pow(n));
        TruncatedSeries term = TruncatedSeries::from_polynomial(numer, kQ, order);
        term = term * inv_poch_series(Polynomial::term(Monomial(kQ, 1), Rational(1)), n, order);
        term = term * inv_poch_series(abx_p, n, order);
        rhs = rhs + term;
    }
    if (!(lhs == rhs)) {
        for (int k = 0; k <= order; ++k)
            if (!(lhs.coeff(k) == rhs.coeff(k))) {
                fail(rep, "series differ first at order " + std::to_string(k));
                break;
            }
    }
    return rep;
}

VerificationReport verify_jackson_symbolic(int order, const Rational& a, const Rational& x) {
    VerificationReport rep = make_report("jackson", "symbolic_q", order);
    rep.parameters["a"] = rat_str(a);
    rep.parameters["x"] = rat_str(x);
    rep.parameters["beta"] = "symbolic";
    Polynomial beta_p = Polynomial::variable(kBeta);
    TruncatedSeries lhs = pochhammer_inf(beta_p, kQ, order);
    TruncatedSeries rhs = jackson_rhs_times_abx_inf(beta_p, a, x, order);
    if (!(lhs == rhs)) {
        for (int k = 0; k <= order; ++k)
            if (!(lhs.coeff(k) == rhs.coeff(k))) {
                fail(rep, "series differ first at order " + std::to_string(k));
                break;
            }
    }
    return rep;
}

namespace {

VerificationReport sylvester_impl(int order, const Polynomial& beta_p, VerificationReport rep) {
    TruncatedSeries total(kQ, order);
    for (int n = 0; n * (3 * n + 1) / 2 <= order; ++n) {
        Polynomial numer = Polynomial::term(Monomial(kQ, n * (3 * n + 1) / 2),
                                            Rational(n % 2 == 0 ? 1 : -1));
        numer = numer * beta_p.pow(static_cast<unsigned>(n));
        numer = numer * (Polynomial::constant(1) - beta_p.shift(Monomial(kQ, 2 * n + 1)));
        TruncatedSeries term = TruncatedSeries::from_polynomial(numer, kQ, order);
        term = term * inv_poch_series(Polynomial::term(Monomial(kQ, 1), Rational(1)), n, order);
        term = term * pochhammer_inf(beta_p.shift(Monomial(kQ, n + 1)), kQ, order).inverse();
        total = total + term;
    }
    TruncatedSeries one = TruncatedSeries::one(kQ, order);
    if (!(total == one)) {
        for (int k = 0; k <= order; ++k)
            if (!(total.coeff(k) == one.coeff(k))) {
                fail(rep, "series differs from 1 first at order " + std::to_string(k));
                break;
            }
    }
    return rep;
}

} // namespace

VerificationReport verify_sylvester(int order, const Rational& beta) {
    VerificationReport rep = make_report("sylvester", "rational_point", order);
    rep.parameters["beta"] = rat_str(beta);
    return sylvester_impl(order, Polynomial::constant(beta), std::move(rep));
}

VerificationReport verify_sylvester_symbolic(int order) {
    VerificationReport rep = make_report("sylvester", "symbolic_q", order);
    rep.parameters["beta"] = "symbolic";
    return sylvester_impl(order, Polynomial::variable(kBeta), std::move(rep));
}

VerificationReport verify_andrews(int n_max) {
    VerificationReport rep = make_report("andrews", "symbolic_q", n_max);
    rep.parameters["beta"] = "symbolic";
    RatFun beta = var(kBeta);
    RatFun q = var(kQ);
    RatFun mbq = -beta * q;
    for (int N = 0; N <= n_max && rep.verified; ++N) {
        RatFun lhs = pochhammer(mbq, kQ, 2 * N);
        RatFun rhs;
        for (int n = 0; n <= N; ++n) {
            RatFun t = pochhammer(mbq, kQ, n - 1);
            t = t * (RatFun::constant(1) + beta * q.pow(2 * n));
            t = t * beta.pow(n) * q.pow(n * (3 * n - 1) / 2);
            t = t * RatFun(q_binomial(N, n, kQ));
            t = t * pochhammer(mbq * q.pow(n + N), kQ, N - n);
            rhs = rhs + t;
        }
        if (!(lhs == rhs)) fail(rep, "symbolic mismatch at N=" + std::to_string(N));
    }
    return rep;
}

VerificationReport verify_sears(int n_max, const VerifyOptions& opt) {
    VerificationReport rep = make_report("sears", "rational_point", n_max);
    rep.parameters["samples"] = std::to_string(opt.samples);
    rep.parameters["seed"] = std::to_string(opt.seed);
    RationalSampler rng(opt.seed);
    for (int n = 0; n <= n_max && rep.verified; ++n) {
        int done = 0, tries = 0;
        while (done < opt.samples && rep.verified) {
            if (++tries > 100 * opt.samples)
                throw PoleHit("sears: pole-avoiding sampling exceeded retry cap");
            Rational q = rng.next(), a = rng.next(), b = rng.next(), d = rng.next(),
                     e = rng.next();
            try {
                HypergeometricSpec left{{rat(1) / var(kQ).pow(n), RatFun::constant(a),
                                         RatFun::constant(b)},
                                        {RatFun::constant(d), RatFun::constant(e)},
                                        kQ,
                                        RatFun::constant(d * e / (a * b)) * var(kQ).pow(n)};
                HypergeometricSpec right{{rat(1) / var(kQ).pow(n), RatFun::constant(a),
                                          RatFun::constant(d / b)},
                                         {RatFun::constant(d),
                                          RatFun::constant(a / e) * var(kQ).pow(1 - n)},
                                         kQ,
                                         var(kQ)};
                std::map<Variable, Rational> at{{kQ, q}};
                Rational lhs = basic_hypergeometric(left, n).eval(at);
                Rational prefactor = poch_rat(e / a, q, n) / poch_rat(e, q, n);
                Rational rhs = prefactor * basic_hypergeometric(right, n).eval(at);
                if (lhs != rhs)
                    fail(rep, "point mismatch at n=" + std::to_string(n) + " sample " +
                                  std::to_string(done));
                ++done;
            } catch (const Error&) {
                continue;  // pole: resample
            }
        }
    }
    return rep;
}

VerificationReport verify_lemma_main(int k_max) {
    VerificationReport rep = make_report("lemma_main", "symbolic_q", k_max);
    RatFun u = var(Variable::scalar("u"));
    RatFun v = var(Variable::scalar("v"));
    RatFun x1 = var(Variable::x(1));
    for (int k = 1; k <= k_max && rep.verified; ++k) {
        RatFun g = (RatFun::constant(1) - u * x1) / (RatFun::constant(1) - v * x1);
        for (int j = 1; j <= k - 1; ++j)
            g = g * (RatFun::constant(1) - x1 * var(Variable::c(j)));
        RatFun lhs = apply_chain(g, 1, k, Family::X);
        RatFun rhs = v - u;
        for (int j = 1; j <= k - 1; ++j) rhs = rhs * (v - var(Variable::c(j)));
        for (int j = 1; j <= k + 1; ++j)
            rhs = rhs / (RatFun::constant(1) - v * var(Variable::x(j)));
        if (!(lhs == rhs)) fail(rep, "divdiff engine differs from closed form at k=" +
                                         std::to_string(k));
    }

    // Proof-route cross-check through the symmetric-function layer: the
    // image of e_j(x_2..x_{k+1}) x_1^i under d_1..d_k is the Schur
    // determinant S_{1^j, i-k} on k+1 letters, which vanishes unless
    // i + j = k where it is (-1)^j.
    for (int k = 1; k <= std::min(k_max, 4) && rep.verified; ++k) {
        Alphabet tail, full;
        for (int i = 2; i <= k + 1; ++i) tail.push_back(var(Variable::x(i)));
        for (int i = 1; i <= k + 1; ++i) full.push_back(var(Variable::x(i)));
        for (int i = 0; i <= k && rep.verified; ++i) {
            for (int j = 0; j <= k && rep.verified; ++j) {
                RatFun g = elementary(j, tail) * var(Variable::x(1)).pow(i);
                RatFun image = apply_chain(g, 1, k, Family::X);
                std::vector<int> lambda(static_cast<std::size_t>(j), 1);
                lambda.push_back(i - k);
                RatFun schur = schur_multi(
                    lambda, std::vector<Alphabet>(static_cast<std::size_t>(j) + 1, full));
                if (!(image == schur))
                    fail(rep, "power/Schur image mismatch at k=" + std::to_string(k) +
                                  " i=" + std::to_string(i) + " j=" + std::to_string(j));
                RatFun expected = (i + j == k)
                                      ? RatFun::constant(j % 2 == 0 ? 1 : -1)
                                      : RatFun();
                if (!(schur == expected))
                    fail(rep, "Schur determinant value unexpected at k=" + std::to_string(k) +
                                  " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
        }
    }
    return rep;
}

VerificationReport verify_proposition(int k_max) {
    VerificationReport rep = make_report("proposition", "symbolic_q", k_max);
    RatFun u = var(Variable::scalar("u"));
    RatFun v = var(Variable::scalar("v"));
    RatFun x = var(interp_var());
    RatFun f = (RatFun::constant(1) - u * x) / (RatFun::constant(1) - v * x);
    InterpolationContext ctx = InterpolationContext::symbolic();
    std::vector<RatFun> coeffs = rational_newton_coeffs(f, ctx, k_max);
    RatFun a0 = (RatFun::constant(1) - u * var(Variable::x(1))) /
                (RatFun::constant(1) - v * var(Variable::x(1)));
    if (!(coeffs[0] == a0)) fail(rep, "A_0 differs from (1-u x1)/(1-v x1)");
    for (int k = 1; k <= k_max && rep.verified; ++k) {
        if (!(coeffs[static_cast<std::size_t>(k)] == bibasic_coefficient(k, u, v, ctx)))
            fail(rep, "A_k differs from closed form at k=" + std::to_string(k));
    }
    return rep;
}

VerificationReport verify_gasper(int k_max, const Rational& p, const Rational& q,
                                 const Rational& a, const Rational& b) {
    VerificationReport rep = make_report("gasper", "symbolic_q", k_max);
    rep.parameters["p"] = rat_str(p);
    rep.parameters["q"] = rat_str(q);
    rep.parameters["a"] = rat_str(a);
    rep.parameters["b"] = rat_str(b);

    // structural: term k of (Gas1)*(1-v x1) under X={q^{i-1}}, C={a p^i},
    // v=1, x=b equals term k of the bibasic sum, symbolically in a,b,p,q.
    RatFun av = var(Variable::scalar("a"));
    RatFun bv = var(Variable::scalar("b"));
    RatFun pv = var(kP);
    RatFun qv = var(kQ);
    auto x_i = [&](int i) { return qv.pow(i - 1); };
    auto c_i = [&](int i) { return av * pv.pow(i); };
    for (int k = 0; k <= k_max && rep.verified; ++k) {
        RatFun lhs;
        if (k == 0) {
            lhs = RatFun::constant(1);
        } else {
            RatFun num = RatFun::constant(1);
            for (int j = 1; j <= k - 1; ++j) num = num * (RatFun::constant(1) - c_i(j));
            num = num * (RatFun::constant(1) - x_i(k + 1) * c_i(k));
            RatFun den = RatFun::constant(1);
            for (int j = 2; j <= k + 1; ++j) den = den * (RatFun::constant(1) - x_i(j));
            RatFun basis_num = RatFun::constant(1);
            for (int j = 1; j <= k; ++j) basis_num = basis_num * (bv - x_i(j));
            RatFun basis_den = RatFun::constant(1);
            for (int j = 1; j <= k; ++j)
                basis_den = basis_den * (RatFun::constant(1) - bv * c_i(j));
            lhs = num / den * basis_num / basis_den;
        }
        RatFun rhs = (RatFun::constant(1) - av * pv.pow(k) * qv.pow(k)) /
                     (RatFun::constant(1) - av);
        rhs = rhs * pochhammer(av, kP, k) * pochhammer(bv.inverse(), kQ, k) * bv.pow(k);
        rhs = rhs / (pochhammer(qv, kQ, k) * pochhammer(av * bv * pv, kP, k));
        if (!(lhs == rhs)) fail(rep, "structural per-term mismatch at k=" + std::to_string(k));
    }

    // numeric: exact partial sums shrink monotonically in magnitude and
    // |S_{k_max}| is below 1/1000 at the chosen rationals.
    std::vector<Rational> sums;
    Rational s(0);
    for (int k = 0; k <= k_max; ++k) {
        Rational term = (Rational(1) - a * p.pow(k) * q.pow(k)) / (Rational(1) - a) *
                        poch_rat(a, p, k) * poch_rat(b.inverse(), q, k) * b.pow(k) /
                        (poch_rat(q, q, k) * poch_rat(a * b * p, p, k));
        s += term;
        sums.push_back(s);
    }
    int half = (k_max + 1) / 2;
    if (!(sums.back().abs() < sums[static_cast<std::size_t>(half)].abs()))
        fail(rep, "partial sums not shrinking from midpoint to k_max");
    for (std::size_t k = 2; k < sums.size(); ++k)
        if (!(sums[k].abs() < sums[k - 1].abs()))
            fail(rep, "partial-sum magnitude not monotone at k=" + std::to_string(k));
    if (!(sums.back().abs() < Rational(1, 1000)))
        fail(rep, "|S_" + std::to_string(k_max) + "| not below 1/1000");
    return rep;
}

VerificationReport verify_gosper(int n_max, const VerifyOptions& opt) {
    VerificationReport rep = make_report("gosper", "rational_point", n_max);
    rep.parameters["samples"] = std::to_string(opt.samples);
    rep.parameters["seed"] = std::to_string(opt.seed);
    RationalSampler rng(opt.seed);
    for (int n = 0; n <= n_max && rep.verified; ++n) {
        int done = 0, tries = 0;
        while (done < opt.samples && rep.verified) {
            if (++tries > 100 * opt.samples)
                throw PoleHit("gosper: pole-avoiding sampling exceeded retry cap");
            Rational p = rng.next(), q = rng.next(), a = rng.next(), c = rng.next();
            try {
                if (a.is_zero() || c.is_zero() || c == Rational(1)) continue;
                // first displayed form
                Rational sum1(0);
                for (int k = 0; k <= n; ++k) {
                    sum1 += (Rational(1) - a * p.pow(k) * q.pow(k)) / (Rational(1) - a) *
                            poch_rat(a, p, k) * poch_rat(c, q, k) * c.pow(-k) /
                            (poch_rat(q, q, k) * poch_rat(a * p / c, p, k));
                }
                Rational rhs1 = poch_rat(a * p, p, n) * poch_rat(c * q, q, n) * c.pow(-n) /
                                (poch_rat(q, q, n) * poch_rat(a * p / c, p, n));
                if (sum1 != rhs1)
                    fail(rep, "first form mismatch at n=" + std::to_string(n));

                // second displayed form, with term-by-term (Pro) specialization
                Rational sum2(0);
                Rational ratio = q.pow(-n) - c;  // pro_term_k = ratio * gos_term_k
                for (int k = 0; k <= n; ++k) {
                    Rational gos_term =
                        (Rational(1) - a * p.pow(n - k) * q.pow(n - k)) *
                        poch_rat(q.pow(n - k + 1), q, k) *
                        poch_rat(a * p.pow(n - k + 1) / c, p, k) * c.pow(k) /
                        (poch_rat(c * q.pow(n - k), q, k + 1) *
                         poch_rat(a * p.pow(n - k), p, k + 1));
                    sum2 += gos_term;

                    // (Pro) at X={p^{-n+i-1}/a}, C={q^{-n+i}}, u=q^{-n}, v=1, x=1/c
                    auto xi = [&](int i) { return p.pow(-n + i - 1) / a; };
                    auto ci = [&](int i) { return q.pow(-n + i); };
                    Rational pro_term;
                    if (k == 0) {
                        pro_term = (Rational(1) - q.pow(-n) * xi(1)) / (Rational(1) - xi(1));
                    } else {
                        Rational num = Rational(1) - q.pow(-n);
                        for (int j = 1; j <= k - 1; ++j) num *= Rational(1) - ci(j);
                        num *= Rational(1) - xi(k + 1) * ci(k);
                        Rational den(1);
                        for (int j = 1; j <= k + 1; ++j) den *= Rational(1) - xi(j);
                        Rational basis(1);
                        for (int j = 1; j <= k; ++j)
                            basis *= (c.inverse() - xi(j)) / (Rational(1) - c.inverse() * ci(j));
                        pro_term = num / den * basis;
                    }
                    if (pro_term != ratio * gos_term)
                        fail(rep, "(Pro) specialization term mismatch at n=" +
                                      std::to_string(n) + " k=" + std::to_string(k));
                }
                if (sum2 != (Rational(1) - c).inverse())
                    fail(rep, "second form mismatch at n=" + std::to_string(n));
                ++done;
            } catch (const Error&) {
                continue;
            }
        }
    }
    return rep;
}

VerificationReport verify_liu(int n_max) {
    VerificationReport rep = make_report("liu", "symbolic_q", n_max);
    RatFun a = var(Variable::scalar("a"));
    RatFun q = var(kQ);
    RatFun x = var(interp_var());
    InterpolationContext liu_ctx{FamilySpec::geometric(a * q, q),
                                 FamilySpec::geometric(RatFun::constant(1), q)};
    Rational b(2, 3);
    std::vector<RatFun> fs{RatFun::constant(1), x, x.pow(2),
                           (RatFun::constant(1) - RatFun::constant(b) * x).inverse()};
    std::map<Variable, RatFun> a_to_zero{{Variable::scalar("a"), RatFun()}};
    for (std::size_t fi = 0; fi < fs.size() && rep.verified; ++fi) {
        const RatFun& f = fs[fi];
        std::vector<RatFun> coeffs = rational_newton_coeffs(f, liu_ctx, n_max);
        for (int n = 0; n <= n_max && rep.verified; ++n) {
            RatFun bracket = liu_coefficient(n, f, a);
            RatFun liu = n == 0 ? bracket
                                : (RatFun::constant(1) - a * q.pow(2 * n)) /
                                      pochhammer(q, kQ, n) * bracket;
            if (!(coeffs[static_cast<std::size_t>(n)] == liu))
                fail(rep, "Liu coefficient mismatch for f index " + std::to_string(fi) +
                              " at n=" + std::to_string(n));
            // Carlitz limit a -> 0
            RatFun lhs0 = coeffs[static_cast<std::size_t>(n)].substitute(a_to_zero);
            RatFun carlitz = n == 0 ? bracket.substitute(a_to_zero)
                                    : bracket.substitute(a_to_zero) /
                                          pochhammer(q, kQ, n);
            if (!(lhs0 == carlitz))
                fail(rep, "Carlitz limit mismatch for f index " + std::to_string(fi) +
                              " at n=" + std::to_string(n));
        }
    }
    return rep;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opt) {
    std::vector<VerificationReport> reports;
    reports.push_back(verify_andrews(3));
    reports.push_back(verify_gasper(6, Rational(1, 3), Rational(1, 2), Rational(1, 5),
                                    Rational(1, 7)));
    reports.push_back(verify_gosper(6, opt));
    reports.push_back(verify_jackson(12, Rational(1, 2), Rational(1, 3), Rational(1, 5)));
    reports.push_back(verify_jackson(12, Rational(2, 3), Rational(-1, 4), Rational(3, 7)));
    reports.push_back(verify_jackson(12, Rational(1, 5), Rational(2, 3), Rational(-2, 5)));
    reports.push_back(verify_jackson_symbolic(10, Rational(1, 2), Rational(1, 3)));
    reports.push_back(verify_lemma_main(5));
    reports.push_back(verify_liu(3));
    reports.push_back(verify_proposition(5));
    reports.push_back(verify_q_vandermonde(8, opt));
    reports.push_back(verify_sears(5, opt));
    reports.push_back(verify_sylvester(15, Rational(1, 7)));
    reports.push_back(verify_sylvester_symbolic(15));
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.identity != b.identity) return a.identity < b.identity;
                         if (a.mode != b.mode) return a.mode < b.mode;
                         return a.parameters < b.parameters;
                     });
    return reports;
}

} // namespace ratinterp
