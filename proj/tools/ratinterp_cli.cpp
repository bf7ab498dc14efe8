#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratinterp/divdiff.hpp"
#include "ratinterp/errors.hpp"
#include "ratinterp/identities.hpp"
#include "ratinterp/interp.hpp"
#include "ratinterp/parser.hpp"

using namespace ratinterp;

namespace {

Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw SyntaxError("expected a rational like 2/3, got '" + s + "'", 0, 0);
    }
}

RatFun parse_value(const std::string& s) { return ast_to_ratfun(parse_expression(s)); }

FamilySpec parse_family(const std::string& s) {
    if (s == "symbolic") return FamilySpec::symbolic();
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw SyntaxError("family spec must be geom:, const:, list: or symbolic", 0, 0);
    std::string head = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    if (head == "geom") {
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw SyntaxError("geom spec needs scale,ratio", 0, 0);
        return FamilySpec::geometric(parse_value(rest.substr(0, comma)),
                                     parse_value(rest.substr(comma + 1)));
    }
    if (head == "const") return FamilySpec::constant(parse_value(rest));
    if (head == "list") {
        std::vector<RatFun> values;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto semi = rest.find(';', pos);
            if (semi == std::string::npos) semi = rest.size();
            values.push_back(parse_value(rest.substr(pos, semi - pos)));
            pos = semi + 1;
        }
        return FamilySpec::explicit_list(std::move(values));
    }
    throw SyntaxError("unknown family spec kind '" + head + "'", 0, 0);
}

unsigned long long default_seed() {
    if (const char* env = std::getenv("RATINTERP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw SyntaxError("RATINTERP_SEED must be an unsigned integer", 0, 0);
        }
    }
    return 12345;
}

struct VerifyArgs {
    std::string identity;
    std::optional<int> order, n_max, k_max, samples;
    std::optional<unsigned long long> seed;
    std::optional<std::string> a, x, beta, p, q, b, mode;
    bool json = false;
};

std::vector<VerificationReport> run_verify(const VerifyArgs& v) {
    VerifyOptions opt;
    opt.seed = v.seed.value_or(default_seed());
    if (v.samples) opt.samples = *v.samples;

    auto rat_or = [&](const std::optional<std::string>& s, const Rational& dflt) {
        return s ? parse_rational(*s) : dflt;
    };

    const std::string& id = v.identity;
    std::vector<VerificationReport> reports;
    if (id == "all") {
        return verify_all(opt);
    } else if (id == "q_vandermonde") {
        reports.push_back(verify_q_vandermonde(v.n_max.value_or(8), opt));
    } else if (id == "jackson") {
        Rational a = rat_or(v.a, Rational(1, 2));
        Rational x = rat_or(v.x, Rational(1, 3));
        if (v.mode.value_or(v.beta ? "points" : "symbolic") == "symbolic")
            reports.push_back(verify_jackson_symbolic(v.order.value_or(10), a, x));
        else
            reports.push_back(verify_jackson(v.order.value_or(12), a, x,
                                             rat_or(v.beta, Rational(1, 5))));
    } else if (id == "sylvester") {
        if (v.mode.value_or(v.beta ? "points" : "symbolic") == "symbolic")
            reports.push_back(verify_sylvester_symbolic(v.order.value_or(15)));
        else
            reports.push_back(verify_sylvester(v.order.value_or(15),
                                               rat_or(v.beta, Rational(1, 7))));
    } else if (id == "andrews") {
        reports.push_back(verify_andrews(v.n_max.value_or(3)));
    } else if (id == "sears") {
        reports.push_back(verify_sears(v.n_max.value_or(5), opt));
    } else if (id == "lemma_main") {
        reports.push_back(verify_lemma_main(v.k_max.value_or(5)));
    } else if (id == "proposition") {
        reports.push_back(verify_proposition(v.k_max.value_or(5)));
    } else if (id == "gasper") {
        reports.push_back(verify_gasper(v.k_max.value_or(6), rat_or(v.p, Rational(1, 3)),
                                        rat_or(v.q, Rational(1, 2)),
                                        rat_or(v.a, Rational(1, 5)),
                                        rat_or(v.b, Rational(1, 7))));
    } else if (id == "gosper") {
        reports.push_back(verify_gosper(v.n_max.value_or(6), opt));
    } else if (id == "liu") {
        reports.push_back(verify_liu(v.n_max.value_or(3)));
    } else {
        throw SyntaxError("unknown identity '" + id + "'", 0, 0);
    }
    return reports;
}

int emit_reports(const std::vector<VerificationReport>& reports, bool json) {
    bool all_ok = true;
    if (json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            arr.push_back(nlohmann::ordered_json::parse(r.to_json()));
            all_ok = all_ok && r.verified;
        }
        std::cout << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << r.summary_line() << "\n";
            all_ok = all_ok && r.verified;
        }
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of a rational Newton interpolation theorem "
                 "and the q-series identities it implies"};
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients A_0..A_depth of f");
    std::string f_text;
    std::string x_spec = "symbolic", c_spec = "symbolic";
    int depth = 3;
    bool coeffs_json = false;
    coeffs->add_option("--f", f_text, "expression for f(x)")->required();
    coeffs->add_option("--x-family", x_spec, "interpolation points");
    coeffs->add_option("--c-family", c_spec, "pole parameters");
    coeffs->add_option("--depth", depth, "highest coefficient index");
    coeffs->add_flag("--json", coeffs_json);

    // verify
    auto* verify = app.add_subcommand("verify", "Verify one identity, or 'all'");
    VerifyArgs vargs;
    verify->add_option("identity", vargs.identity)->required();
    verify->add_option("--order", vargs.order);
    verify->add_option("--n-max", vargs.n_max);
    verify->add_option("--k-max", vargs.k_max);
    verify->add_option("--samples", vargs.samples);
    verify->add_option("--seed", vargs.seed);
    verify->add_option("--a", vargs.a);
    verify->add_option("--x", vargs.x);
    verify->add_option("--beta", vargs.beta);
    verify->add_option("--p", vargs.p);
    verify->add_option("--q", vargs.q);
    verify->add_option("--b", vargs.b);
    verify->add_option("--mode", vargs.mode)
        ->check(CLI::IsMember({"symbolic", "points"}));
    verify->add_flag("--json", vargs.json);

    // lemma1
    auto* lemma1 = app.add_subcommand("lemma1", "Y_n(b_1,X) d_1..d_i at B = X");
    int l_n = 0, l_i = 0;
    lemma1->add_option("--n", l_n)->required();
    lemma1->add_option("--i", l_i)->required();

    // term
    auto* term = app.add_subcommand("term", "Basis term Y_n(x,X)/(x,C)_n");
    int t_n = 0;
    std::string t_x_spec = "symbolic", t_c_spec = "symbolic";
    term->add_option("--n", t_n)->required();
    term->add_option("--x-family", t_x_spec);
    term->add_option("--c-family", t_c_spec);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*coeffs) {
            if (depth < 0) throw IndexOutOfRange("depth must be >= 0");
            RatFun f = parse_value(f_text);
            InterpolationContext ctx{parse_family(x_spec), parse_family(c_spec)};
            std::vector<RatFun> a = rational_newton_coeffs(f, ctx, depth);
            if (coeffs_json) {
                nlohmann::ordered_json out = nlohmann::ordered_json::array();
                for (const auto& c : a) out.push_back(c.str());
                std::cout << out.dump(2) << "\n";
            } else {
                for (std::size_t n = 0; n < a.size(); ++n)
                    std::cout << "A_" << n << " = " << a[n].str() << "\n";
            }
            return 0;
        }
        if (*verify) return emit_reports(run_verify(vargs), vargs.json);
        if (*lemma1) {
            std::cout << lemma1_check(l_n, l_i).str() << "\n";
            return 0;
        }
        if (*term) {
            InterpolationContext ctx{parse_family(t_x_spec), parse_family(t_c_spec)};
            std::cout << expansion_term(t_n, ctx).str() << "\n";
            return 0;
        }
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSymbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
