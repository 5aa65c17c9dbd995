#include "mzvfrac/shuffle.hpp"

#include <optional>
#include <vector>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

namespace {

LinComb<Word> prepend(const Letter& first, const LinComb<Word>& rest) {
    LinComb<Word> out;
    for (const auto& [w, c] : rest) {
        std::vector<Letter> letters;
        letters.reserve(w.size() + 1);
        letters.push_back(first);
        letters.insert(letters.end(), w.letters().begin(), w.letters().end());
        out.add(Word(std::move(letters)), c);
    }
    return out;
}

Word suffix(const Word& w, std::size_t from) {
    return Word(std::vector<Letter>(w.letters().begin() + static_cast<std::ptrdiff_t>(from),
                                    w.letters().end()));
}

// Memo table over suffix pairs (a[i..], b[j..]); local to one top-level call.
class ShuffleMemo {
public:
    ShuffleMemo(const Word& a, const Word& b)
        : a_(a), b_(b), table_((a.size() + 1) * (b.size() + 1)) {}

    const LinComb<Word>& get(std::size_t i, std::size_t j) {
        auto& slot = table_[i * (b_.size() + 1) + j];
        if (!slot) {
            if (i == a_.size()) {
                slot.emplace(suffix(b_, j));
            } else if (j == b_.size()) {
                slot.emplace(suffix(a_, i));
            } else {
                LinComb<Word> left = prepend(a_[i], get(i + 1, j));
                left += prepend(b_[j], get(i, j + 1));
                slot.emplace(std::move(left));
            }
        }
        return *slot;
    }

private:
    const Word& a_;
    const Word& b_;
    std::vector<std::optional<LinComb<Word>>> table_;
};

}  // namespace

LinComb<Word> shuffle(const Word& a, const Word& b) {
    ShuffleMemo memo(a, b);
    return memo.get(0, 0);
}

LinComb<StarPair> star_product(const StarPair& p, const StarPair& q) {
    if (!disjoint(p, q)) {
        throw Error(ErrorCode::VariableCollision, "factors share a variable");
    }
    LinComb<StarPair> out;
    for (const auto& [w, c] : shuffle(rho_encode(p), rho_encode(q))) {
        out.add(rho_decode(w), c);
    }
    return out;
}

LinComb<StarPair> star_product(const LinComb<StarPair>& a, const LinComb<StarPair>& b) {
    LinComb<StarPair> out;
    for (const auto& [p, cp] : a) {
        for (const auto& [q, cq] : b) {
            LinComb<StarPair> term = star_product(p, q);
            term *= cp * cq;
            out += term;
        }
    }
    return out;
}

LinComb<StarPair> apply_p(const RotaIndex& b, const LinComb<StarPair>& xi) {
    LinComb<StarPair> out;
    for (const auto& [p, c] : xi) {
        if (b.is_zero()) {
            if (p.is_unit()) {
                throw Error(ErrorCode::UnitInDomainOfP0, "P_0 is undefined on the unit");
            }
            std::vector<int> exps = p.exponents().parts();
            ++exps.front();
            out.add(StarPair(Composition(std::move(exps)), p.variables()), c);
        } else {
            std::vector<int> exps{1};
            exps.insert(exps.end(), p.exponents().parts().begin(), p.exponents().parts().end());
            std::vector<Variable> vars{b.variable()};
            vars.insert(vars.end(), p.variables().begin(), p.variables().end());
            out.add(StarPair(Composition(std::move(exps)), std::move(vars)), c);
        }
    }
    return out;
}

}  // namespace mzvfrac
