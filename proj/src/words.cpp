#include "mzvfrac/words.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

namespace {

// Node-based set: element addresses are stable for the life of the process.
const std::string* intern(std::string_view name) {
    static std::mutex mutex;
    static std::unordered_set<std::string> pool;
    std::lock_guard lock(mutex);
    return &*pool.emplace(name).first;
}

}  // namespace

bool Variable::is_valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Variable::Variable(std::string_view name) {
    if (!is_valid_name(name)) {
        throw Error(ErrorCode::ParseError, "invalid variable name '" + std::string(name) + "'");
    }
    name_ = intern(name);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw Error(ErrorCode::InvalidArgument, "composition parts must be >= 1");
    }
}

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

void extend_compositions(int remaining, std::size_t slots, std::vector<int>& prefix,
                         std::vector<Composition>& out) {
    if (slots == 1) {
        prefix.push_back(remaining);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int first = 1; remaining - first >= static_cast<int>(slots) - 1; ++first) {
        prefix.push_back(first);
        extend_compositions(remaining - first, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int weight, std::size_t parts) {
    std::vector<Composition> out;
    if (parts == 0) {
        if (weight == 0) out.emplace_back();
        return out;
    }
    if (weight < static_cast<int>(parts)) return out;
    std::vector<int> prefix;
    extend_compositions(weight, parts, prefix, out);
    std::sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) {
        return std::lexicographical_compare(a.parts().rbegin(), a.parts().rend(), b.parts().rbegin(),
                                            b.parts().rend());
    });
    return out;
}

StarPair::StarPair(Composition exponents, std::vector<Variable> variables)
    : exponents_(std::move(exponents)), variables_(std::move(variables)) {
    if (exponents_.depth() != variables_.size()) {
        throw Error(ErrorCode::InvalidArgument, "exponent and variable lists differ in length");
    }
}

bool StarPair::has_distinct_variables() const {
    std::vector<Variable> sorted = variables_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

int weight(const StarPair& p) noexcept { return p.exponents().weight(); }

bool disjoint(const StarPair& p, const StarPair& q) {
    for (const auto& u : p.variables()) {
        if (std::find(q.variables().begin(), q.variables().end(), u) != q.variables().end()) {
            return false;
        }
    }
    return true;
}

Word concat(const Word& a, const Word& b) {
    std::vector<Letter> letters;
    letters.reserve(a.size() + b.size());
    letters.insert(letters.end(), a.letters().begin(), a.letters().end());
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(letters));
}

Word rho_encode(const StarPair& p) {
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(weight(p)));
    for (std::size_t i = 0; i < p.depth(); ++i) {
        letters.insert(letters.end(), static_cast<std::size_t>(p.exponents()[i] - 1), Letter::x0());
        letters.push_back(Letter::of(p.variables()[i]));
    }
    return Word(std::move(letters));
}

StarPair rho_decode(const Word& w) {
    if (!w.admissible()) throw Error(ErrorCode::NotAdmissible, "word ends in x0");
    std::vector<int> exps;
    std::vector<Variable> vars;
    int run = 1;
    for (const Letter& l : w.letters()) {
        if (l.is_x0()) {
            ++run;
        } else {
            exps.push_back(run);
            vars.push_back(l.variable());
            run = 1;
        }
    }
    return StarPair(Composition(std::move(exps)), std::move(vars));
}

}  // namespace mzvfrac
