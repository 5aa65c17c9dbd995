#ifndef MZVFRAC_SHUFFLE_HPP
#define MZVFRAC_SHUFFLE_HPP

#include <optional>

#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

/// Shuffle product of two words by the two-branch recursion
///   (a a') ⧢ (b b') = a (a' ⧢ b b') + b (a a' ⧢ b'),   1 ⧢ w = w ⧢ 1 = w.
/// Sub-products are memoized per call on the pair of suffixes.
LinComb<Word> shuffle(const Word& a, const Word& b);

/// The shuffle product carried over to star pairs through rho.
/// Throws Error(VariableCollision) if p and q share a variable.
LinComb<StarPair> star_product(const StarPair& p, const StarPair& q);

/// Bilinear extension of star_product.
LinComb<StarPair> star_product(const LinComb<StarPair>& a, const LinComb<StarPair>& b);

/// Index of the operators P: either the formal symbol Zero or a variable.
class RotaIndex {
public:
    static RotaIndex zero() noexcept { return RotaIndex(); }
    explicit RotaIndex(Variable v) noexcept : var_(v) {}

    bool is_zero() const noexcept { return !var_.has_value(); }
    Variable variable() const { return *var_; }

private:
    RotaIndex() noexcept = default;
    std::optional<Variable> var_;
};

/// P_0 raises the first exponent; P_u prepends the block <1;u> (and sends
/// the unit to <1;u>). Extended linearly.
/// Throws Error(UnitInDomainOfP0) if the index is Zero and `xi` has a unit term.
LinComb<StarPair> apply_p(const RotaIndex& b, const LinComb<StarPair>& xi);

}  // namespace mzvfrac

#endif  // MZVFRAC_SHUFFLE_HPP
