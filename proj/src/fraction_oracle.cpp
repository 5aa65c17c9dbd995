#include "mzvfrac/fraction_oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

void Assignment::bind(Variable v, mpq_class value) {
    value.canonicalize();
    if (value <= 0) {
        throw Error(ErrorCode::NonPositiveRate, "value for '" + v.name() + "' must be positive");
    }
    values_.insert_or_assign(v, std::move(value));
}

const mpq_class& Assignment::at(Variable v) const {
    auto it = values_.find(v);
    if (it == values_.end()) throw Error(ErrorCode::UnboundVariable, "'" + v.name() + "' is not assigned");
    return it->second;
}

mpq_class eval_fraction(const StarPair& p, const Assignment& a) {
    mpq_class denom = 1;
    mpq_class tail = 0;
    for (std::size_t i = p.depth(); i-- > 0;) {
        tail += a.at(p.variables()[i]);
        mpq_class power;
        mpz_pow_ui(power.get_num_mpz_t(), tail.get_num_mpz_t(), static_cast<unsigned long>(p.exponents()[i]));
        mpz_pow_ui(power.get_den_mpz_t(), tail.get_den_mpz_t(), static_cast<unsigned long>(p.exponents()[i]));
        denom *= power;
    }
    return 1 / denom;
}

mpq_class eval_lincomb(const LinComb<StarPair>& l, const Assignment& a) {
    mpq_class sum = 0;
    for (const auto& [p, c] : l) sum += mpq_class(c) * eval_fraction(p, a);
    return sum;
}

std::vector<Assignment> draw_samples(std::span<const Variable> vars, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(1, 1000);
    std::vector<Assignment> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) {
        Assignment a;
        std::set<mpq_class> used;
        for (const auto& v : vars) {
            mpq_class x;
            do {
                x = mpq_class(dist(rng), dist(rng));
                x.canonicalize();
            } while (!used.insert(x).second);
            a.bind(v, x);
        }
        out.push_back(std::move(a));
    }
    return out;
}

Verdict verify_identity(const StarPair& p, const StarPair& q, const LinComb<StarPair>& rhs,
                        std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
    std::set<Variable> var_set(p.variables().begin(), p.variables().end());
    var_set.insert(q.variables().begin(), q.variables().end());
    for (const auto& [term, c] : rhs) var_set.insert(term.variables().begin(), term.variables().end());
    const std::vector<Variable> vars(var_set.begin(), var_set.end());

    const std::vector<Assignment> points = draw_samples(vars, samples, seed);
    std::vector<char> holds(points.size(), 0);
    const auto n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        const auto& a = points[static_cast<std::size_t>(i)];
        holds[static_cast<std::size_t>(i)] = eval_fraction(p, a) * eval_fraction(q, a) == eval_lincomb(rhs, a);
    }

    Verdict v;
    auto bad = std::find(holds.begin(), holds.end(), 0);
    if (bad == holds.end()) {
        v.verified = true;
    } else {
        v.sample_index = static_cast<std::size_t>(bad - holds.begin());
        v.counterexample = points[v.sample_index];
    }
    return v;
}

}  // namespace mzvfrac
