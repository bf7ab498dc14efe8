#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratinterp/interp.hpp"
#include "ratinterp/rational.hpp"

namespace ratinterp {

struct VerificationReport {
    std::string identity;
    std::string mode;  // "symbolic_q" or "rational_point"
    std::map<std::string, std::string> parameters;
    int order_or_n = 0;
    bool verified = false;
    std::optional<std::string> witness;  // first differing coefficient/point

    std::string to_json() const;
    std::string summary_line() const;
};

// Seeded random rational points for the finite identities; pole avoidance is
// rejection sampling with a bounded retry count.
struct VerifyOptions {
    unsigned long long seed = 12345;
    int samples = 10;
};

VerificationReport verify_q_vandermonde(int n_max, const VerifyOptions& opt = {});
VerificationReport verify_jackson(int order, const Rational& a, const Rational& x,
                                  const Rational& beta);
VerificationReport verify_jackson_symbolic(int order, const Rational& a, const Rational& x);
VerificationReport verify_sylvester(int order, const Rational& beta);
VerificationReport verify_sylvester_symbolic(int order);
VerificationReport verify_andrews(int n_max);
VerificationReport verify_sears(int n_max, const VerifyOptions& opt = {});
VerificationReport verify_lemma_main(int k_max);
VerificationReport verify_proposition(int k_max);
VerificationReport verify_gasper(int k_max, const Rational& p, const Rational& q,
                                 const Rational& a, const Rational& b);
VerificationReport verify_gosper(int n_max, const VerifyOptions& opt = {});
VerificationReport verify_liu(int n_max);

// Every identity at its default (acceptance-grade) parameters, sorted by
// identity name. Deterministic for a fixed seed.
std::vector<VerificationReport> verify_all(const VerifyOptions& opt = {});

// The extraction bracket of the theorem's proof:
//   [Y_n(b_1,X)/(b_1,C)_n] (b_1,C)_{k-1} d_1...d_k |_{B=X}.
// Equals 0 for k != n and 1/(1 - x_{n+1} c_n) for k = n.
RatFun extraction_bracket(int k, int n);

} // namespace ratinterp
