#ifndef MZVFRAC_TESTS_BRUTE_FORCE_HPP
#define MZVFRAC_TESTS_BRUTE_FORCE_HPP

// Independent oracles for the unit tests. Nothing here calls the code paths
// they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "mzvfrac/closed_form.hpp"
#include "mzvfrac/lincomb.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac::testing {

// Every interleaving, enumerated as the bitmask of positions taken by `a`.
inline LinComb<Word> brute_force_shuffle(const Word& a, const Word& b) {
    const std::size_t n = a.size() + b.size();
    LinComb<Word> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
        std::vector<Letter> letters;
        std::size_t i = 0, j = 0;
        for (std::size_t pos = 0; pos < n; ++pos) {
            letters.push_back((mask >> pos) & 1 ? a[i++] : b[j++]);
        }
        out.add(Word(std::move(letters)), 1);
    }
    return out;
}

// Patterns from all 2-colourings of [1..k+l] with k positions for phi.
inline std::vector<ShufflePattern> brute_force_patterns(std::size_t k, std::size_t l) {
    const std::size_t n = k + l;
    std::vector<ShufflePattern> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
        ShufflePattern pat;
        for (std::size_t pos = 0; pos < n; ++pos) ((mask >> pos) & 1 ? pat.phi : pat.psi).push_back(pos + 1);
        out.push_back(pat);
    }
    return out;
}

// Direct nested loops over N >= n_1 > ... > n_k >= 1.
inline double brute_force_zeta(const std::vector<int>& s, int N) {
    std::function<double(std::size_t, int)> rec = [&](std::size_t depth, int below) -> double {
        if (depth == s.size()) return 1.0;
        double sum = 0;
        for (int n = 1; n < below; ++n) sum += std::pow(n, -s[depth]) * rec(depth + 1, n);
        return sum;
    };
    return rec(0, N + 1);
}

// Direct loops over u in [1,N]^k of prod (u_i + ... + u_k)^{-s_i}.
inline double brute_force_fraction_sum(const std::vector<int>& s, int N) {
    const std::size_t k = s.size();
    std::vector<int> u(k, 1);
    double sum = 0;
    while (true) {
        double term = 1;
        int tail = 0;
        for (std::size_t i = k; i-- > 0;) {
            tail += u[i];
            term *= std::pow(tail, -s[i]);
        }
        sum += term;
        std::size_t i = 0;
        while (i < k && u[i] == N) u[i++] = 1;
        if (i == k) break;
        ++u[i];
    }
    return sum;
}

inline std::vector<Word> all_words(const std::vector<Letter>& alphabet, std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (const auto& l : alphabet) next.push_back(concat(w, Word{l}));
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace mzvfrac::testing

#endif  // MZVFRAC_TESTS_BRUTE_FORCE_HPP
