#pragma once

#include <vector>

#include "ratinterp/ratfun.hpp"

namespace ratinterp {

// Finite alphabet of (usually polynomial) values.
using Alphabet = std::vector<RatFun>;

// Elementary symmetric function e_i(A): coefficient of t^i in prod(1 + a t).
// Zero outside 0 <= i <= |A|.
RatFun elementary(int i, const Alphabet& a);

// Complete symmetric function S_i(A): coefficient of t^i in prod 1/(1 - a t).
// Zero for i < 0, one for i = 0.
RatFun complete(int i, const Alphabet& a);

// Multi-alphabet Schur function S_lambda(A_1..A_n) = det |S_{lambda_j + j - i}(A_j)|,
// one alphabet per column. lambda in N^n, parts unconstrained.
RatFun schur_multi(const std::vector<int>& lambda, const std::vector<Alphabet>& alphabets);

// Flag identity: S_lambda(x_2, x_3, ...) x_1^r = S_{lambda,r}(X,..,X, x_1)
// with alphabets truncated at m letters (left: x_2..x_{m+1}; right columns:
// X = x_1..x_{m+1}, last column just x_1).
bool check_flag_identity(const std::vector<int>& lambda, int r, int m);

} // namespace ratinterp
