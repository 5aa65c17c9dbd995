#ifndef MZVFRAC_CLOSED_FORM_HPP
#define MZVFRAC_CLOSED_FORM_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

/// A pair of order-preserving injections phi: [k] -> [k+l], psi: [l] -> [k+l]
/// whose images partition [k+l]. Positions are 1-based.
struct ShufflePattern {
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;

    std::size_t size() const noexcept { return phi.size() + psi.size(); }
    bool in_phi(std::size_t i) const;
    bool in_psi(std::size_t i) const;
    /// Checks strict monotonicity, range and the partition property.
    bool valid() const;

    friend bool operator==(const ShufflePattern&, const ShufflePattern&) = default;
};

/// All C(k+l, k) patterns, ordered lexicographically on the image of phi.
std::vector<ShufflePattern> enumerate_patterns(std::size_t k, std::size_t l);

/// Position i holds u_j if i = phi(j) and v_j if i = psi(j).
std::vector<Variable> merge_variables(std::span<const Variable> u, std::span<const Variable> v,
                                      const ShufflePattern& pat);

/// r_j if i = phi(j), s_j if i = psi(j). `i` is 1-based.
int h_value(const ShufflePattern& pat, const Composition& r, const Composition& s, std::size_t i);

/// Binomial coefficient C(n, k), zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

/// The per-position factor of the product formula. With prefix sums
/// T_i, R_j, S_j of t, r, s:
///   C(t_i - 1, h_i - 1)                       if i = 1 or positions i-1, i come
///                                             from the same factor,
///   C(t_i - 1, T_i - R_{|phi^-1[i]|} - S_{|psi^-1[i]|})   otherwise.
mpz_class coefficient(const ShufflePattern& pat, const Composition& r, const Composition& s,
                      const Composition& t, std::size_t i);

/// Product of coefficient(..., i) over all positions.
mpz_class cell_coefficient(const ShufflePattern& pat, const Composition& r, const Composition& s,
                           const Composition& t);

/// Sum over all patterns and all exponent splits t (|t| = |r| + |s|) of
/// cell_coefficient * <t; merged variables>. Cells are evaluated in parallel
/// and merged in a fixed order. Throws Error(VariableCollision).
LinComb<StarPair> closed_form_product(const StarPair& p, const StarPair& q);

/// Single-threaded evaluation of the same sum; kept as the reference for
/// the parallel kernel.
LinComb<StarPair> closed_form_product_serial(const StarPair& p, const StarPair& q);

/// closed_form_product(<i;m>, <j;n>) with the reserved variables m and n.
/// Throws Error(InvalidArgument) if i or j is < 1.
LinComb<StarPair> euler_decomposition(int i, int j);

}  // namespace mzvfrac

#endif  // MZVFRAC_CLOSED_FORM_HPP
