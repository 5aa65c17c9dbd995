#ifndef MZVFRAC_MZV_NUMERIC_HPP
#define MZVFRAC_MZV_NUMERIC_HPP

#include <cstddef>

#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

/// Hard per-index cutoff for truncated sums (binary64 arithmetic).
class TruncationSpec {
public:
    /// Throws Error(InvalidArgument) if cutoff < 1.
    explicit TruncationSpec(std::size_t cutoff);
    std::size_t cutoff() const noexcept { return cutoff_; }

private:
    std::size_t cutoff_;
};

/// sum over N >= n_1 > ... > n_k >= 1 of prod n_i^{-s_i}, via running prefix
/// sums, O(kN). Throws Error(NotAdmissible) if s is empty or s_1 == 1.
double zeta_truncated(const Composition& s, TruncationSpec spec);

/// Orthant sum of the fraction over u in [1,N]^k, computed by a windowed
/// prefix-sum recursion over the partial sums n_i = u_i + ... + u_k, O(k^2 N).
/// Throws Error(NotAdmissible) if s_1 == 1.
double fraction_sum_truncated(const StarPair& p, TruncationSpec spec);

/// Same kernels without OpenMP, for testing and benchmarking.
namespace serial {
double zeta_truncated(const Composition& s, TruncationSpec spec);
double fraction_sum_truncated(const StarPair& p, TruncationSpec spec);
}  // namespace serial

struct SummedVerdict {
    double lhs = 0;
    double rhs = 0;
    double gap = 0;
    bool pass = false;
};

/// Compares zeta(p) zeta(q) with sum coef * zeta(term) using identically
/// truncated nested sums. Variable labels are ignored.
/// Throws Error(NotAdmissible) if any leading exponent is 1.
SummedVerdict check_summed_identity(const StarPair& p, const StarPair& q,
                                    const LinComb<StarPair>& rhs, TruncationSpec spec, double tol);

}  // namespace mzvfrac

#endif  // MZVFRAC_MZV_NUMERIC_HPP
