#include "ratinterp/symfun.hpp"

#include "ratinterp/errors.hpp"

namespace ratinterp {

RatFun elementary(int i, const Alphabet& a) {
    if (i < 0 || static_cast<std::size_t>(i) > a.size()) return {};
    std::vector<RatFun> e(static_cast<std::size_t>(i) + 1);
    e[0] = RatFun::constant(1);
    for (const auto& letter : a)
        for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] = e[j] + letter * e[j - 1];
    return e[static_cast<std::size_t>(i)];
}

RatFun complete(int i, const Alphabet& a) {
    if (i < 0) return {};
    std::vector<RatFun> h(static_cast<std::size_t>(i) + 1);
    h[0] = RatFun::constant(1);
    // adding a letter: H'(t) = H(t)/(1 - a t)  =>  h'_j = h_j + a h'_{j-1}
    for (const auto& letter : a)
        for (std::size_t j = 1; j < h.size(); ++j) h[j] = h[j] + letter * h[j - 1];
    return h[static_cast<std::size_t>(i)];
}

namespace {

RatFun determinant(std::vector<std::vector<RatFun>> m) {
    std::size_t n = m.size();
    if (n == 0) return RatFun::constant(1);
    if (n == 1) return m[0][0];
    RatFun det;
    for (std::size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<RatFun>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        RatFun term = m[r][0] * determinant(std::move(minor));
        det = (r % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

RatFun schur_multi(const std::vector<int>& lambda, const std::vector<Alphabet>& alphabets) {
    if (lambda.size() != alphabets.size())
        throw IndexOutOfRange("schur_multi: |lambda| must equal the number of alphabets");
    std::size_t n = lambda.size();
    std::vector<std::vector<RatFun>> m(n, std::vector<RatFun>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = complete(lambda[j] + static_cast<int>(j) - static_cast<int>(i), alphabets[j]);
    return determinant(std::move(m));
}

bool check_flag_identity(const std::vector<int>& lambda, int r, int m) {
    Alphabet tail, full;
    for (int i = 2; i <= m + 1; ++i) tail.push_back(RatFun::variable(Variable::x(i)));
    for (int i = 1; i <= m + 1; ++i) full.push_back(RatFun::variable(Variable::x(i)));
    RatFun x1 = RatFun::variable(Variable::x(1));

    RatFun left = schur_multi(lambda, std::vector<Alphabet>(lambda.size(), tail)) * x1.pow(r);

    std::vector<int> rlambda = lambda;
    rlambda.push_back(r);
    std::vector<Alphabet> cols(lambda.size(), full);
    cols.push_back(Alphabet{x1});
    RatFun right = schur_multi(rlambda, cols);

    return left == right;
}

} // namespace ratinterp
