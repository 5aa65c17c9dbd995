#include "mzvfrac/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mzvfrac/closed_form.hpp"
#include "mzvfrac/error.hpp"
#include "mzvfrac/exp_algebra.hpp"
#include "mzvfrac/format.hpp"
#include "mzvfrac/fraction_oracle.hpp"
#include "mzvfrac/mzv_numeric.hpp"
#include "mzvfrac/shuffle.hpp"

namespace mzvfrac::selftest {

namespace {

// Counts checks and keeps the first few failure messages.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& message) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + message();
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checks_ - failures_ << "/" << checks_ << " checks";
        if (!notes_.empty()) os << " (" << notes_ << ")";
        return os.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::string notes_;
};

std::vector<Variable> names(const std::string& stem, std::size_t n) {
    std::vector<Variable> out;
    for (std::size_t i = 1; i <= n; ++i) out.emplace_back(stem + std::to_string(i));
    return out;
}

StarPair pair_of(const Composition& c, const std::vector<Variable>& pool) {
    return StarPair(c, std::vector<Variable>(pool.begin(), pool.begin() + static_cast<long>(c.depth())));
}

std::vector<Composition> compositions_up_to(int max_weight, std::size_t max_depth) {
    std::vector<Composition> out;
    for (int w = 1; w <= max_weight; ++w) {
        for (std::size_t d = 1; d <= max_depth; ++d) {
            for (auto& c : compositions_of(w, d)) out.push_back(std::move(c));
        }
    }
    return out;
}

Composition random_composition(std::mt19937_64& rng, int weight, std::size_t depth) {
    auto all = compositions_of(weight, depth);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

// Random pair of distinct variables drawn from the pool, weight in [max(depth,1), max_weight].
StarPair random_star_pair(std::mt19937_64& rng, const std::vector<Variable>& pool, int max_weight,
                          std::size_t max_depth, bool allow_unit) {
    std::uniform_int_distribution<int> wdist(allow_unit ? 0 : 1, max_weight);
    const int w = wdist(rng);
    if (w == 0) return StarPair();
    std::uniform_int_distribution<std::size_t> ddist(1, std::min<std::size_t>(max_depth, static_cast<std::size_t>(w)));
    const std::size_t d = ddist(rng);
    std::vector<Variable> vars = pool;
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.erase(vars.begin() + static_cast<long>(d), vars.end());
    return StarPair(random_composition(rng, w, d), std::move(vars));
}

LinComb<StarPair> random_element(std::mt19937_64& rng, const std::vector<Variable>& pool, int max_weight,
                                 bool allow_unit) {
    std::uniform_int_distribution<int> nterms(1, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
    LinComb<StarPair> out;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        int c = 0;
        while (c == 0) c = coef(rng);
        out.add(random_star_pair(rng, pool, max_weight, 3, allow_unit), c);
    }
    if (out.empty()) out.add(random_star_pair(rng, pool, max_weight, 3, allow_unit), 1);
    return out;
}

mpq_class random_positive_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 12), den(1, 6);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

ExpSum random_exp_sum(std::mt19937_64& rng, bool strictly_positive) {
    std::uniform_int_distribution<int> nterms(1, 3), zero_rate(0, 3), sign(0, 1);
    ExpSum out;
    while (out.empty()) {
        const int n = nterms(rng);
        for (int i = 0; i < n; ++i) {
            const mpq_class rate = (!strictly_positive && zero_rate(rng) == 0) ? mpq_class(0) : random_positive_rational(rng);
            mpq_class c = random_positive_rational(rng);
            if (sign(rng)) c = -c;
            out.add(rate, c);
        }
    }
    return out;
}

// --- Worked expansions, written out term by term from their displayed form. ---

// 1/(m^i n^j) = sum_{r+s=i+j} C(r-1,i-1)/((m+n)^r n^s) + C(r-1,j-1)/((m+n)^r m^s)
LinComb<StarPair> two_variable_partial_fractions(int i, int j) {
    const Variable m("m"), n("n");
    LinComb<StarPair> out;
    for (int r = 1; r < i + j; ++r) {
        const int s = i + j - r;
        out.add(StarPair({r, s}, {m, n}), binomial(r - 1, i - 1));
        out.add(StarPair({r, s}, {n, m}), binomial(r - 1, j - 1));
    }
    return out;
}

// <r1;u1> times <s1,s2;v1,v2>, three families.
LinComb<StarPair> one_by_two_expansion(int r1, int s1, int s2) {
    const Variable u1("u1"), v1("v1"), v2("v2");
    LinComb<StarPair> out;
    for (int t1 = 1; t1 < r1 + s1; ++t1) {
        out.add(StarPair({t1, r1 + s1 - t1, s2}, {u1, v1, v2}), binomial(t1 - 1, r1 - 1));
    }
    const int total = r1 + s1 + s2;
    for (const auto& t : compositions_of(total, 3)) {
        const int t1 = t[0], t2 = t[1], t3 = t[2];
        out.add(StarPair(t, {v1, u1, v2}), binomial(t1 - 1, s1 - 1) * binomial(t2 - 1, s2 - t3));
        out.add(StarPair(t, {v1, v2, u1}), binomial(t1 - 1, s1 - 1) * binomial(t2 - 1, s2 - 1));
    }
    return out;
}

// <r1,r2;u1,u2> times <s1,s2;v1,v2>, six families. With `leading_at_least_two`
// the sums start at t1 = 2 as in the displayed form.
LinComb<StarPair> two_by_two_expansion(int r1, int r2, int s1, int s2, bool leading_at_least_two) {
    const Variable u1("u1"), u2("u2"), v1("v1"), v2("v2");
    const int lo = leading_at_least_two ? 2 : 1;
    LinComb<StarPair> out;
    for (const auto& t : compositions_of(r1 + r2 + s1, 3)) {
        if (t[0] < lo) continue;
        out.add(StarPair({t[0], t[1], t[2], s2}, {u1, u2, v1, v2}),
                binomial(t[0] - 1, r1 - 1) * binomial(t[1] - 1, r2 - 1));
    }
    for (const auto& t : compositions_of(r1 + s1 + s2, 3)) {
        if (t[0] < lo) continue;
        out.add(StarPair({t[0], t[1], t[2], r2}, {v1, v2, u1, u2}),
                binomial(t[0] - 1, s1 - 1) * binomial(t[1] - 1, s2 - 1));
    }
    for (const auto& t : compositions_of(r1 + r2 + s1 + s2, 4)) {
        if (t[0] < lo) continue;
        const int t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3];
        const mpz_class mid = binomial(t2 - 1, t1 + t2 - r1 - s1);
        out.add(StarPair(t, {u1, v1, u2, v2}), binomial(t1 - 1, r1 - 1) * mid * binomial(t3 - 1, s2 - t4));
        out.add(StarPair(t, {v1, u1, v2, u2}), binomial(t1 - 1, s1 - 1) * mid * binomial(t3 - 1, r2 - t4));
        out.add(StarPair(t, {u1, v1, v2, u2}), binomial(t1 - 1, r1 - 1) * mid * binomial(t3 - 1, s2 - 1));
        out.add(StarPair(t, {v1, u1, u2, v2}), binomial(t1 - 1, s1 - 1) * mid * binomial(t3 - 1, r2 - 1));
    }
    return out;
}

// --- Suites ---

std::string closed_form_suite(Tally& tally) {
    const auto u = names("u", 3), v = names("v", 3);
    const auto comps = compositions_up_to(7, 3);
    long pairs = 0;
    for (const auto& r : comps) {
        for (const auto& s : comps) {
            if (r.weight() + s.weight() > 8) continue;
            ++pairs;
            const StarPair p = pair_of(r, u), q = pair_of(s, v);
            tally.expect(closed_form_product(p, q) == star_product(p, q),
                         [&] { return "mismatch at " + to_literal(p) + " x " + to_literal(q); });
        }
    }
    return std::to_string(pairs) + " pairs";
}

std::string oracle_suite(Tally& tally) {
    std::mt19937_64 rng(20240501);
    const auto u = names("u", 3), v = names("v", 3);
    for (int n = 0; n < 100; ++n) {
        std::uniform_int_distribution<int> wp_dist(1, 7);
        const int wp = wp_dist(rng);
        std::uniform_int_distribution<int> wq_dist(1, 8 - wp);
        const int wq = wq_dist(rng);
        std::uniform_int_distribution<std::size_t> dp(1, std::min(3, wp)), dq(1, std::min(3, wq));
        const StarPair p = pair_of(random_composition(rng, wp, dp(rng)), u);
        const StarPair q = pair_of(random_composition(rng, wq, dq(rng)), v);
        const auto seed = static_cast<std::uint64_t>(n);
        tally.expect(verify_identity(p, q, star_product(p, q), 25, seed).verified,
                     [&] { return "recursive product refuted at " + to_literal(p) + " x " + to_literal(q); });
        tally.expect(verify_identity(p, q, closed_form_product(p, q), 25, seed).verified,
                     [&] { return "closed form refuted at " + to_literal(p) + " x " + to_literal(q); });
    }
    return "100 random pairs, 25 samples each";
}

std::string worked_examples_suite(Tally& tally) {
    // Two single blocks.
    for (int i = 1; i <= 9; ++i) {
        for (int j = 1; i + j <= 10; ++j) {
            tally.expect(euler_decomposition(i, j) == two_variable_partial_fractions(i, j),
                         [&] { return "partial fractions differ at (" + std::to_string(i) + "," + std::to_string(j) + ")"; });
        }
    }
    // One block times two blocks.
    const Variable u1("u1"), u2("u2"), v1("v1"), v2("v2");
    for (int r1 = 1; r1 <= 6; ++r1) {
        for (int s1 = 1; r1 + s1 <= 7; ++s1) {
            for (int s2 = 1; r1 + s1 + s2 <= 8; ++s2) {
                const auto got = closed_form_product(StarPair({r1}, {u1}), StarPair({s1, s2}, {v1, v2}));
                tally.expect(got == one_by_two_expansion(r1, s1, s2), [&] {
                    return "one-by-two expansion differs at " + std::to_string(r1) + "|" + std::to_string(s1) + "," +
                           std::to_string(s2);
                });
            }
        }
    }
    // Unit exponents: three unit terms, and the variant with a repeated middle
    // term in place of the <v1,v2,u1> term is not an identity.
    const StarPair a({1}, {u1}), b({1, 1}, {v1, v2});
    const LinComb<StarPair> three{{StarPair({1, 1, 1}, {u1, v1, v2}), 1},
                                  {StarPair({1, 1, 1}, {v1, u1, v2}), 1},
                                  {StarPair({1, 1, 1}, {v1, v2, u1}), 1}};
    tally.expect(closed_form_product(a, b) == three, [] { return "unit-exponent product is not the three-term sum"; });
    const LinComb<StarPair> duplicated{{StarPair({1, 1, 1}, {u1, v1, v2}), 1}, {StarPair({1, 1, 1}, {v1, u1, v2}), 2}};
    const Verdict dup = verify_identity(a, b, duplicated, 20, 0);
    tally.expect(!dup.verified, [] { return "duplicated-term variant unexpectedly verified"; });
    if (!dup.verified) tally.note("duplicated-term variant rejected at sample " + std::to_string(dup.sample_index));
    // Two blocks times two blocks.
    for (int r1 = 1; r1 <= 5; ++r1) {
        for (int r2 = 1; r1 + r2 <= 6; ++r2) {
            for (int s1 = 1; r1 + r2 + s1 <= 7; ++s1) {
                for (int s2 = 1; r1 + r2 + s1 + s2 <= 8; ++s2) {
                    const auto got = closed_form_product(StarPair({r1, r2}, {u1, u2}), StarPair({s1, s2}, {v1, v2}));
                    const auto tag = [&] {
                        return std::to_string(r1) + "," + std::to_string(r2) + "|" + std::to_string(s1) + "," +
                               std::to_string(s2);
                    };
                    tally.expect(got == two_by_two_expansion(r1, r2, s1, s2, false),
                                 [&] { return "six-family expansion differs at " + tag(); });
                    if (r1 >= 2 && s1 >= 2) {
                        tally.expect(got == two_by_two_expansion(r1, r2, s1, s2, true),
                                     [&] { return "six-family expansion with t1>=2 differs at " + tag(); });
                    }
                }
            }
        }
    }
    return "partial fractions i+j<=10, one-by-two and two-by-two up to weight 8";
}

std::string integral_suite(Tally& tally) {
    std::mt19937_64 rng(7);
    const auto comps = compositions_up_to(6, 6);
    for (const auto& s : comps) {
        for (int n = 0; n < 5; ++n) {
            std::vector<mpq_class> rates;
            Assignment a;
            std::vector<Variable> vars;
            for (std::size_t i = 0; i < s.depth(); ++i) {
                rates.push_back(random_positive_rational(rng));
                vars.emplace_back("b" + std::to_string(i + 1));
                a.bind(vars.back(), rates.back());
            }
            const StarPair p(s, vars);
            const ExpSum f = integral_representation(s, rates);
            const mpq_class value = eval_fraction(p, a);
            mpq_class total = 0;
            for (const auto& r : rates) total += r;
            tally.expect(eval_at_zero(f) == value, [&] { return "value at t=0 differs for " + to_literal(p); });
            tally.expect(f == ExpSum::term(value, total), [&] { return "exponential form differs for " + to_literal(p); });
        }
    }
    return std::to_string(comps.size()) + " compositions x 5 rate vectors";
}

std::string operators_suite(Tally& tally) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> third(0, 2);
    for (int n = 0; n < 600; ++n) {
        const mpq_class l1 = third(rng) == 0 ? mpq_class(0) : random_positive_rational(rng);
        const mpq_class l2 = third(rng) == 0 ? mpq_class(0) : random_positive_rational(rng);
        const ExpSum h1 = random_exp_sum(rng, l1 == 0);
        const ExpSum h2 = random_exp_sum(rng, l2 == 0);
        const ExpSum lhs = exp_mul(integrate(l1, h1), integrate(l2, h2));
        const ExpSum rhs = integrate(l1, exp_mul(h1, integrate(l2, h2))) + integrate(l2, exp_mul(integrate(l1, h1), h2));
        tally.expect(lhs == rhs, [] { return "integration by parts fails"; });
    }
    const auto u = names("u", 3), v = names("v", 3);
    const Variable fresh_a("a"), fresh_b("b");
    for (int n = 0; n < 300; ++n) {
        const RotaIndex ia = third(rng) == 0 ? RotaIndex::zero() : RotaIndex(fresh_a);
        const RotaIndex ib = third(rng) == 0 ? RotaIndex::zero() : RotaIndex(fresh_b);
        const auto x1 = random_element(rng, u, 5, !ia.is_zero());
        const auto x2 = random_element(rng, v, 5, !ib.is_zero());
        const auto lhs = star_product(apply_p(ia, x1), apply_p(ib, x2));
        const auto rhs = apply_p(ia, star_product(x1, apply_p(ib, x2))) + apply_p(ib, star_product(apply_p(ia, x1), x2));
        tally.expect(lhs == rhs, [&] { return "Rota-Baxter identity fails for " + to_text(x1) + " , " + to_text(x2); });
    }
    return "600 exponential-sum cases, 300 star-pair cases";
}

std::string theta_suite(Tally& tally) {
    std::mt19937_64 rng(99);
    const auto u = names("u", 3), v = names("v", 3);
    for (int n = 0; n < 250; ++n) {
        const auto x1 = random_element(rng, u, 5, true);
        const auto x2 = random_element(rng, v, 5, true);
        std::vector<Variable> all = u;
        all.insert(all.end(), v.begin(), v.end());
        const Assignment rates = draw_samples(all, 1, static_cast<std::uint64_t>(n)).front();
        tally.expect(theta(star_product(x1, x2), rates) == exp_mul(theta(x1, rates), theta(x2, rates)),
                     [&] { return "homomorphism fails for " + to_text(x1) + " , " + to_text(x2); });
    }
    return "250 random cases with distinct rational rates";
}

std::string counts_suite(Tally& tally) {
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t l = 1; l <= 6; ++l) {
            const auto pats = enumerate_patterns(k, l);
            const auto expected = binomial(static_cast<long>(k + l), static_cast<long>(k));
            tally.expect(mpz_class(pats.size()) == expected, [&] { return "pattern count wrong"; });
            bool all_valid = true;
            for (std::size_t i = 0; i < pats.size(); ++i) {
                all_valid = all_valid && pats[i].valid() && (i == 0 || pats[i - 1].phi < pats[i].phi);
            }
            tally.expect(all_valid, [] { return "invalid or unordered pattern"; });
        }
    }
    const auto u = names("u", 4), v = names("v", 4);
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::size_t l = 1; l <= 4; ++l) {
            const auto prod = closed_form_product(pair_of(Composition(std::vector<int>(k, 1)), u),
                                                  pair_of(Composition(std::vector<int>(l, 1)), v));
            bool unit_coefs = true;
            for (const auto& [p, c] : prod) unit_coefs = unit_coefs && c == 1;
            tally.expect(mpz_class(prod.size()) == binomial(static_cast<long>(k + l), static_cast<long>(k)) && unit_coefs,
                         [&] { return "all-ones product wrong at k=" + std::to_string(k) + " l=" + std::to_string(l); });
        }
    }
    return "patterns k,l<=6; all-ones products k,l<=4";
}

std::map<Composition, mpz_class> zeta_form(const LinComb<StarPair>& l) {
    std::map<Composition, mpz_class> out;
    for (const auto& [p, c] : l) out[p.exponents()] += c;
    return out;
}

std::string euler_numeric_suite(Tally& tally) {
    const TruncationSpec spec(10000);
    const double tol = 1e-3;
    const double budget_ms = 10000;
    std::ostringstream detail;
    for (auto [i, j] : {std::pair{2, 2}, std::pair{2, 3}}) {
        const auto start = std::chrono::steady_clock::now();
        const auto rhs = euler_decomposition(i, j);
        const auto verdict =
            check_summed_identity(StarPair({i}, {Variable("m")}), StarPair({j}, {Variable("n")}), rhs, spec, tol);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        tally.expect(verdict.pass, [&] { return "gap " + std::to_string(verdict.gap) + " exceeds tolerance"; });
        tally.expect(ms <= budget_ms, [&] { return "case over its 10 s budget"; });
        detail << "(" << i << "," << j << ") gap=" << verdict.gap << " ";
    }
    const auto form = zeta_form(euler_decomposition(2, 2));
    tally.expect(form == std::map<Composition, mpz_class>{{Composition{2, 2}, 2}, {Composition{3, 1}, 4}},
                 [] { return "zeta(2)^2 does not expand to 2 zeta(2,2) + 4 zeta(3,1)"; });
    LinComb<StarPair> wrong{{StarPair({2, 2}, {Variable("m"), Variable("n")}), 2},
                            {StarPair({3, 1}, {Variable("m"), Variable("n")}), 3}};
    const auto bad = check_summed_identity(StarPair({2}, {Variable("m")}), StarPair({2}, {Variable("n")}), wrong, spec, tol);
    tally.expect(!bad.pass, [] { return "wrong coefficient not detected"; });
    detail << "N=10000 tol=1e-3";
    return detail.str();
}

struct SuiteDef {
    const char* name;
    const char* title;
    double budget_ms;
    std::string (*run)(Tally&);
};

const std::vector<SuiteDef>& registry() {
    static const std::vector<SuiteDef> suites{
        {"closed-form", "closed form equals recursive shuffle, all pairs depth<=3, weight<=8", 60000, closed_form_suite},
        {"oracle", "products verified at random rational points", 30000, oracle_suite},
        {"worked-examples", "worked expansions reproduced symbolically", 0, worked_examples_suite},
        {"integral", "integral representation matches fraction values", 10000, integral_suite},
        {"operators", "integration-by-parts and Rota-Baxter identities", 0, operators_suite},
        {"theta", "exponential map is multiplicative", 0, theta_suite},
        {"counts", "pattern and all-ones term counts", 0, counts_suite},
        {"euler-numeric", "truncated Euler decomposition within 1e-3", 20000, euler_numeric_suite},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : registry()) out.emplace_back(s.name);
    return out;
}

SuiteResult run_suite(std::string_view name) {
    for (const auto& s : registry()) {
        if (name != s.name) continue;
        SuiteResult r;
        r.name = s.name;
        r.title = s.title;
        r.budget_ms = s.budget_ms;
        Tally tally;
        const auto start = std::chrono::steady_clock::now();
        std::string what;
        try {
            what = s.run(tally);
        } catch (const std::exception& e) {
            tally.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = r.budget_ms == 0 || r.duration_ms <= r.budget_ms;
        r.passed = tally.ok() && in_time;
        r.detail = what.empty() ? tally.summary() : what + ", " + tally.summary();
        if (!in_time) r.detail += ", over time budget";
        return r;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string to_json_line(const SuiteResult& r) {
    nlohmann::json j{{"name", r.name},
                     {"status", r.passed ? "pass" : "fail"},
                     {"duration_ms", r.duration_ms},
                     {"detail", r.detail}};
    return j.dump();
}

}  // namespace mzvfrac::selftest
