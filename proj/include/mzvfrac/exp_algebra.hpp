#ifndef MZVFRAC_EXP_ALGEBRA_HPP
#define MZVFRAC_EXP_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <span>

#include <gmpxx.h>

#include "mzvfrac/fraction_oracle.hpp"
#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {

/// Finite sum  sum_i c_i e^{b_i t}  with rational coefficients and
/// nonnegative rational rates. Rates are unique keys; zero coefficients are
/// dropped.
class ExpSum {
public:
    ExpSum() = default;

    static ExpSum constant(const mpq_class& c);
    /// Throws Error(InvalidArgument) if rate < 0.
    static ExpSum term(const mpq_class& coef, const mpq_class& rate);

    void add(const mpq_class& rate, const mpq_class& coef);

    /// Every rate is strictly positive (the constant-free part).
    bool strictly_positive() const;

    ExpSum& operator+=(const ExpSum& o);
    ExpSum& operator-=(const ExpSum& o);
    friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
    friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
    friend bool operator==(const ExpSum&, const ExpSum&) = default;

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

private:
    std::map<mpq_class, mpq_class> terms_;
};

ExpSum exp_mul(const ExpSum& a, const ExpSum& b);

/// The operator I_lambda:
///   I_0(e^{bt})      = e^{bt} / b,                   b > 0,
///   I_lambda(e^{bt}) = e^{(b+lambda)t} / (b+lambda), lambda > 0.
/// Throws Error(NotInDomain) if lambda == 0 and f has a constant term, or
/// Error(InvalidArgument) if lambda < 0.
ExpSum integrate(const mpq_class& lambda, const ExpSum& f);

/// (I_0^{s1-1} I_{b1} ... I_0^{sk-1} I_{bk})(1), innermost operator first.
/// Throws Error(InvalidArgument) on length mismatch or empty input,
/// Error(NonPositiveRate) if some b_i <= 0.
ExpSum integral_representation(const Composition& s, std::span<const mpq_class> rates);

/// f(s; b) e^{(b_1+...+b_k) t} for a single block pattern with concrete rates.
ExpSum theta(const Composition& s, std::span<const mpq_class> rates);

/// Linear extension of the assignment <s;u> -> f(s; a(u)) e^{(sum a(u)) t},
/// 1 -> 1, with the variables instantiated by `rates`.
ExpSum theta(const LinComb<StarPair>& xi, const Assignment& rates);

/// Value at t = 0, i.e. the sum of coefficients.
mpq_class eval_at_zero(const ExpSum& f);

}  // namespace mzvfrac

#endif  // MZVFRAC_EXP_ALGEBRA_HPP
