// Command-line front end: products, identity checks, Euler decompositions,
// integral-representation checks and the self-test suites.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzvfrac/closed_form.hpp"
#include "mzvfrac/error.hpp"
#include "mzvfrac/exp_algebra.hpp"
#include "mzvfrac/format.hpp"
#include "mzvfrac/fraction_oracle.hpp"
#include "mzvfrac/mzv_numeric.hpp"
#include "mzvfrac/selftest.hpp"
#include "mzvfrac/shuffle.hpp"

namespace {

using namespace mzvfrac;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Options {
    OutputFormat format = OutputFormat::Text;
    std::string p, q;
    std::string method = "both";
    std::size_t samples = 25;
    std::uint64_t seed = 0;
    int i = 0, j = 0;
    std::size_t cutoff = 10000;
    double tol = 1e-3;
    std::string literal;
    std::string suite;
    bool json = false;
};

std::string zeta_text(const LinComb<StarPair>& l) {
    std::map<Composition, mpz_class> by_comp;
    for (const auto& [p, c] : l) by_comp[p.exponents()] += c;
    std::string out;
    for (const auto& [s, c] : by_comp) {
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const mpz_class mag = abs(c);
        if (mag != 1) out += mag.get_str() + "*";
        out += "zeta(";
        for (std::size_t k = 0; k < s.depth(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
        out += ")";
    }
    return out.empty() ? "0" : out;
}

int cmd_shuffle(const Options& o) {
    const StarPair p = parse_star_pair(o.p);
    const StarPair q = parse_star_pair(o.q);
    if (o.method == "recursive" || o.method == "closed") {
        const auto prod = o.method == "recursive" ? star_product(p, q) : closed_form_product(p, q);
        std::cout << render(prod, o.format) << "\n";
        return kExitOk;
    }
    const auto rec = star_product(p, q);
    const auto closed = closed_form_product(p, q);
    const bool match = rec == closed;
    switch (o.format) {
        case OutputFormat::Text:
            std::cout << "recursive: " << to_text(rec) << "\n"
                      << "closed:    " << to_text(closed) << "\n";
            break;
        case OutputFormat::Latex:
            std::cout << to_latex(closed) << "\n% recursive and closed-form expansions\n";
            break;
        case OutputFormat::Json: {
            nlohmann::json doc{{"recursive", nlohmann::json::parse(to_json(rec))},
                               {"closed", nlohmann::json::parse(to_json(closed))},
                               {"match", match}};
            std::cout << doc.dump() << "\n";
            return match ? kExitOk : kExitMismatch;
        }
    }
    std::cout << (o.format == OutputFormat::Latex ? "% " : "") << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitMismatch;
}

int cmd_verify(const Options& o) {
    const StarPair p = parse_star_pair(o.p);
    const StarPair q = parse_star_pair(o.q);
    const auto rhs = closed_form_product(p, q);
    const Verdict v = verify_identity(p, q, rhs, o.samples, o.seed);
    if (v.verified) {
        std::cout << "Verified (" << o.samples << " samples, seed " << o.seed << ")\n";
        return kExitOk;
    }
    std::cout << "Counterexample at sample " << v.sample_index << ":";
    for (const auto& [var, value] : *v.counterexample) std::cout << " " << var.name() << "=" << value.get_str();
    std::cout << "\n";
    return kExitMismatch;
}

int cmd_euler(const Options& o) {
    if (o.i < 1 || o.j < 1) {
        std::cerr << "error: exponents must be positive integers\n";
        return kExitUsage;
    }
    const auto expansion = euler_decomposition(o.i, o.j);
    std::cout << render(expansion, o.format) << "\n";
    if (o.format == OutputFormat::Json) return kExitOk;
    std::cout << "summed: zeta(" << o.i << ")*zeta(" << o.j << ") = " << zeta_text(expansion) << "\n";
    if (o.i < 2 || o.j < 2) {
        std::cout << "numeric check skipped: divergent\n";
        return kExitOk;
    }
    const auto v = check_summed_identity(StarPair({o.i}, {Variable("m")}), StarPair({o.j}, {Variable("n")}),
                                         expansion, TruncationSpec(o.cutoff), o.tol);
    std::cout.precision(12);
    std::cout << "numeric: lhs=" << v.lhs << " rhs=" << v.rhs << " gap=" << v.gap << " (N=" << o.cutoff
              << ", tol=" << o.tol << "): " << (v.pass ? "pass" : "fail") << "\n";
    return v.pass ? kExitOk : kExitMismatch;
}

int cmd_integral_check(const Options& o) {
    const RatedComposition rc = parse_rated_composition(o.literal);
    const ExpSum f = integral_representation(rc.exponents, rc.rates);
    Assignment a;
    std::vector<Variable> vars;
    for (std::size_t k = 0; k < rc.rates.size(); ++k) {
        vars.emplace_back("b" + std::to_string(k + 1));
        a.bind(vars.back(), rc.rates[k]);
    }
    const mpq_class at_zero = eval_at_zero(f);
    const mpq_class direct = eval_fraction(StarPair(rc.exponents, vars), a);
    const bool ok = at_zero == direct;
    std::cout << at_zero.get_str() << (ok ? " = " : " != ") << direct.get_str() << "\n";
    return ok ? kExitOk : kExitMismatch;
}

int cmd_selftest(const Options& o) {
    std::vector<std::string> names = selftest::suite_names();
    if (!o.suite.empty()) {
        if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
            std::cerr << "error: unknown suite '" << o.suite << "'\n";
            return kExitUsage;
        }
        names = {o.suite};
    }
    bool all = true;
    for (const auto& name : names) {
        const auto r = selftest::run_suite(name);
        all = all && r.passed;
        if (o.json) {
            std::cout << selftest::to_json_line(r) << "\n";
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << static_cast<long>(r.duration_ms)
                      << " ms): " << r.detail << "\n";
        }
    }
    return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Products of multiple-zeta-value fractions"};
    app.require_subcommand(1);
    app.fallthrough();
    const std::map<std::string, OutputFormat> formats{
        {"text", OutputFormat::Text}, {"latex", OutputFormat::Latex}, {"json", OutputFormat::Json}};
    app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* shuffle = app.add_subcommand("shuffle", "Product of two star pairs, e.g. shuffle \"1;u\" \"1,1;v1,v2\"");
    shuffle->add_option("p", o.p, "First factor <comp>;<vars>")->required();
    shuffle->add_option("q", o.q, "Second factor <comp>;<vars>")->required();
    shuffle->add_option("--method", o.method, "recursive, closed or both")
        ->check(CLI::IsMember({"recursive", "closed", "both"}));

    auto* verify = app.add_subcommand("verify", "Check the closed-form product at random rational points");
    verify->add_option("p", o.p)->required();
    verify->add_option("q", o.q)->required();
    verify->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed);

    auto* euler = app.add_subcommand("euler", "Expand 1/(m^i n^j) and check the summed identity numerically");
    euler->add_option("i", o.i)->required();
    euler->add_option("j", o.j)->required();
    euler->add_option("--cutoff", o.cutoff)->check(CLI::PositiveNumber);
    euler->add_option("--tol", o.tol);

    auto* integral = app.add_subcommand("integral-check", "Compare the composed integral operators with the fraction");
    integral->add_option("literal", o.literal, "<comp>;<positive rationals>")->required();

    auto* self = app.add_subcommand("selftest", "Run the acceptance suites");
    self->add_option("--suite", o.suite);
    self->add_flag("--json", o.json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (shuffle->parsed()) return cmd_shuffle(o);
        if (verify->parsed()) return cmd_verify(o);
        if (euler->parsed()) return cmd_euler(o);
        if (integral->parsed()) return cmd_integral_check(o);
        if (self->parsed()) return cmd_selftest(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.message() << "\n" << e.caret_diagnostic() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
