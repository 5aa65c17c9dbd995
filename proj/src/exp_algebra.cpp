#include "mzvfrac/exp_algebra.hpp"

#include <vector>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

ExpSum ExpSum::constant(const mpq_class& c) { return term(c, 0); }

ExpSum ExpSum::term(const mpq_class& coef, const mpq_class& rate) {
    ExpSum out;
    out.add(rate, coef);
    return out;
}

void ExpSum::add(const mpq_class& rate, const mpq_class& coef) {
    if (rate < 0) throw Error(ErrorCode::InvalidArgument, "rates must be nonnegative");
    if (coef == 0) return;
    auto [it, inserted] = terms_.try_emplace(rate, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ExpSum::strictly_positive() const { return terms_.empty() || terms_.begin()->first > 0; }

ExpSum& ExpSum::operator+=(const ExpSum& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

ExpSum exp_mul(const ExpSum& a, const ExpSum& b) {
    ExpSum out;
    for (const auto& [ra, ca] : a) {
        for (const auto& [rb, cb] : b) out.add(ra + rb, ca * cb);
    }
    return out;
}

ExpSum integrate(const mpq_class& lambda, const ExpSum& f) {
    if (lambda < 0) throw Error(ErrorCode::InvalidArgument, "lambda must be nonnegative");
    if (lambda == 0 && !f.strictly_positive()) {
        throw Error(ErrorCode::NotInDomain, "I_0 is undefined on constants");
    }
    ExpSum out;
    for (const auto& [b, c] : f) {
        const mpq_class rate = b + lambda;
        out.add(rate, c / rate);
    }
    return out;
}

ExpSum integral_representation(const Composition& s, std::span<const mpq_class> rates) {
    if (s.empty() || rates.size() != s.depth()) {
        throw Error(ErrorCode::InvalidArgument, "need one positive rate per block");
    }
    for (const auto& b : rates) {
        if (b <= 0) throw Error(ErrorCode::NonPositiveRate, "rates must be positive");
    }
    ExpSum f = ExpSum::constant(1);
    for (std::size_t i = s.depth(); i-- > 0;) {
        f = integrate(rates[i], f);
        for (int n = 1; n < s[i]; ++n) f = integrate(0, f);
    }
    return f;
}

ExpSum theta(const Composition& s, std::span<const mpq_class> rates) {
    if (rates.size() != s.depth()) throw Error(ErrorCode::InvalidArgument, "need one rate per block");
    Assignment a;
    std::vector<Variable> vars;
    for (std::size_t i = 0; i < rates.size(); ++i) {
        vars.emplace_back("b" + std::to_string(i + 1));
        a.bind(vars.back(), rates[i]);
    }
    return theta(LinComb<StarPair>(StarPair(s, std::move(vars))), a);
}

ExpSum theta(const LinComb<StarPair>& xi, const Assignment& rates) {
    ExpSum out;
    for (const auto& [p, c] : xi) {
        mpq_class total = 0;
        for (const auto& v : p.variables()) total += rates.at(v);
        out.add(total, mpq_class(c) * eval_fraction(p, rates));
    }
    return out;
}

mpq_class eval_at_zero(const ExpSum& f) {
    mpq_class sum = 0;
    for (const auto& [b, c] : f) sum += c;
    return sum;
}

}  // namespace mzvfrac
