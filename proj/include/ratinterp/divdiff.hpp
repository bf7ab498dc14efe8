#pragma once

#include "ratinterp/ratfun.hpp"

namespace ratinterp {

// Divided difference acting on the consecutive pair (v_i, v_{i+1}) of an
// indexed family: f |-> (f - f^{s_i}) / (v_i - v_{i+1}).
RatFun apply_divdiff(const RatFun& f, int i, Family fam = Family::X);

// Left-to-right composition d_from d_{from+1} ... d_to.
RatFun apply_chain(const RatFun& f, int from, int to, Family fam = Family::X);

// Y_n(b_1, X) d_1...d_i specialized at B = X; equals 1 iff i == n, else 0.
Rational lemma1_check(int n, int i);

// Substitution b_j -> x_j for every B variable up to max_index.
RatFun specialize_b_to_x(const RatFun& f, int max_index);

} // namespace ratinterp
