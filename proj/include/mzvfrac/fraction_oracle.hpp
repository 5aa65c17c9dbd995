#ifndef MZVFRAC_FRACTION_ORACLE_HPP
#define MZVFRAC_FRACTION_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

/// Positive rational values for variables. Positivity guarantees that no
/// tail sum u_i + ... + u_k vanishes.
class Assignment {
public:
    Assignment() = default;

    /// Throws Error(NonPositiveRate) if value <= 0.
    void bind(Variable v, mpq_class value);
    /// Throws Error(UnboundVariable).
    const mpq_class& at(Variable v) const;
    bool contains(Variable v) const { return values_.count(v) != 0; }

    std::size_t size() const noexcept { return values_.size(); }
    auto begin() const noexcept { return values_.begin(); }
    auto end() const noexcept { return values_.end(); }

    friend bool operator==(const Assignment&, const Assignment&) = default;

private:
    std::map<Variable, mpq_class> values_;
};

/// prod_i (u_i + ... + u_k)^(-s_i); the unit evaluates to 1.
mpq_class eval_fraction(const StarPair& p, const Assignment& a);

mpq_class eval_lincomb(const LinComb<StarPair>& l, const Assignment& a);

struct Verdict {
    bool verified = false;
    // Index and values of the first failing sample, if any.
    std::size_t sample_index = 0;
    std::optional<Assignment> counterexample;
};

/// Deterministic sample points: `count` assignments of the given variables
/// to pairwise-distinct positive rationals with numerator and denominator
/// in [1, 1000].
std::vector<Assignment> draw_samples(std::span<const Variable> vars, std::size_t count,
                                     std::uint64_t seed);

/// Checks f(p) * f(q) == eval(rhs) exactly at `samples` random points.
/// Samples are evaluated in parallel; the reported counterexample is the
/// failing sample with the smallest index. Throws Error(InvalidArgument) if
/// samples == 0.
Verdict verify_identity(const StarPair& p, const StarPair& q, const LinComb<StarPair>& rhs,
                        std::size_t samples, std::uint64_t seed);

}  // namespace mzvfrac

#endif  // MZVFRAC_FRACTION_ORACLE_HPP
