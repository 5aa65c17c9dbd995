#ifndef MZVFRAC_LINCOMB_HPP
#define MZVFRAC_LINCOMB_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

#include <gmpxx.h>

namespace mzvfrac {

/// Finite formal sum of basis elements with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored and iteration follows
/// the basis type's `operator<`, so two equal sums are equal term by term.
template <class Basis>
class LinComb {
public:
    using map_type = std::map<Basis, mpz_class>;
    using const_iterator = typename map_type::const_iterator;

    LinComb() = default;
    explicit LinComb(Basis b, mpz_class coef = 1) { add(std::move(b), coef); }
    LinComb(std::initializer_list<std::pair<Basis, long>> terms) {
        for (const auto& [b, c] : terms) add(b, mpz_class(c));
    }

    void add(const Basis& b, const mpz_class& coef) {
        if (coef == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, coef);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [b, c] : other.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [b, c] : other.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const mpz_class& k) {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto& [b, c] : terms_) c *= k;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const mpz_class& k) { return a *= k; }
    friend LinComb operator*(const mpz_class& k, LinComb a) { return a *= k; }

    friend bool operator==(const LinComb& a, const LinComb& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [basis, coef] : a.terms_) {
            if (!(basis == it->first) || coef != it->second) return false;
            ++it;
        }
        return true;
    }

    mpz_class coefficient(const Basis& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    // Sum of all coefficients, i.e. the number of terms counted with multiplicity.
    mpz_class total_multiplicity() const {
        mpz_class sum = 0;
        for (const auto& [b, c] : terms_) sum += c;
        return sum;
    }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

private:
    map_type terms_;
};

}  // namespace mzvfrac

#endif  // MZVFRAC_LINCOMB_HPP
