#ifndef MZVFRAC_WORDS_HPP
#define MZVFRAC_WORDS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mzvfrac/lincomb.hpp"

namespace mzvfrac {

/// A variable symbol. Names are interned in a process-wide table, so a
/// Variable is a single pointer and equality is pointer equality. The total
/// order is lexicographic on the name.
class Variable {
public:
    /// Throws Error(ParseError) unless `name` matches [A-Za-z][A-Za-z0-9_]*.
    explicit Variable(std::string_view name);

    const std::string& name() const noexcept { return *name_; }

    static bool is_valid_name(std::string_view name) noexcept;

    friend bool operator==(const Variable& a, const Variable& b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) noexcept {
        if (a.name_ == b.name_) return std::strong_ordering::equal;
        return a.name_->compare(*b.name_) < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    const std::string* name_;
};

/// Ordered tuple of positive integers. The empty composition is the unit.
class Composition {
public:
    Composition() = default;
    /// Throws Error(InvalidArgument) if any part is < 1.
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t depth() const noexcept { return parts_.size(); }
    int weight() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

/// All compositions of `weight` into exactly `parts` positive parts, in
/// colexicographic order (last part varies slowest).
std::vector<Composition> compositions_of(int weight, std::size_t parts);

/// The symbol <s1,...,sk ; u1,...,uk>. The empty pair is the unit 1.
///
/// The free monoid on the <r;u> generators allows the same variable to occur
/// in several blocks, so repeated variables are representable; operations
/// that need generic variables check `has_distinct_variables()` or
/// disjointness themselves.
class StarPair {
public:
    StarPair() = default;
    /// Throws Error(InvalidArgument) on a length mismatch.
    StarPair(Composition exponents, std::vector<Variable> variables);

    const Composition& exponents() const noexcept { return exponents_; }
    const std::vector<Variable>& variables() const noexcept { return variables_; }
    std::size_t depth() const noexcept { return exponents_.depth(); }
    bool is_unit() const noexcept { return exponents_.empty(); }
    bool has_distinct_variables() const;

    // Lexicographic on the variable vector, then on the exponent vector.
    friend bool operator==(const StarPair&, const StarPair&) = default;
    friend std::strong_ordering operator<=>(const StarPair& a, const StarPair& b) {
        if (auto c = a.variables_ <=> b.variables_; c != 0) return c;
        return a.exponents_ <=> b.exponents_;
    }

private:
    Composition exponents_;
    std::vector<Variable> variables_;
};

/// Sum of exponents; 0 for the unit.
int weight(const StarPair& p) noexcept;

/// True if no variable occurs in both pairs.
bool disjoint(const StarPair& p, const StarPair& q);

/// A letter of the doubled alphabet: x0, or x_u for a variable u.
/// x0 sorts before every variable letter.
class Letter {
public:
    static Letter x0() noexcept { return Letter(); }
    static Letter of(Variable v) noexcept { return Letter(v); }

    bool is_x0() const noexcept { return !var_.has_value(); }
    /// Precondition: !is_x0().
    Variable variable() const { return *var_; }

    friend bool operator==(const Letter&, const Letter&) = default;
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) noexcept {
        return a.var_ <=> b.var_;
    }

private:
    Letter() noexcept = default;
    explicit Letter(Variable v) noexcept : var_(v) {}

    std::optional<Variable> var_;
};

/// Element of the free monoid on the doubled alphabet. Ordered by length,
/// then lexicographically on letters.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    /// Empty, or ends in a variable letter.
    bool admissible() const noexcept { return letters_.empty() || !letters_.back().is_x0(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

/// x0^{s1-1} x_{u1} ... x0^{sk-1} x_{uk}.
Word rho_encode(const StarPair& p);

/// Inverse of rho_encode. Throws Error(NotAdmissible) if `w` ends in x0.
StarPair rho_decode(const Word& w);

}  // namespace mzvfrac

#endif  // MZVFRAC_WORDS_HPP
