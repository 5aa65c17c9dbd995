#include "mzvfrac/closed_form.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mzvfrac/error.hpp"

namespace mzvfrac {

bool ShufflePattern::in_phi(std::size_t i) const { return std::binary_search(phi.begin(), phi.end(), i); }

bool ShufflePattern::in_psi(std::size_t i) const { return std::binary_search(psi.begin(), psi.end(), i); }

bool ShufflePattern::valid() const {
    const std::size_t n = size();
    auto increasing_in_range = [n](const std::vector<std::size_t>& m) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (m[j] < 1 || m[j] > n) return false;
            if (j > 0 && m[j] <= m[j - 1]) return false;
        }
        return true;
    };
    if (!increasing_in_range(phi) || !increasing_in_range(psi)) return false;
    std::vector<bool> hit(n + 1, false);
    for (auto i : phi) hit[i] = true;
    for (auto i : psi) {
        if (hit[i]) return false;
        hit[i] = true;
    }
    return std::all_of(hit.begin() + 1, hit.end(), [](bool b) { return b; });
}

std::vector<ShufflePattern> enumerate_patterns(std::size_t k, std::size_t l) {
    const std::size_t n = k + l;
    std::vector<ShufflePattern> out;
    // phi image as a k-combination of [1..n], advanced in lexicographic order.
    std::vector<std::size_t> phi(k);
    for (std::size_t j = 0; j < k; ++j) phi[j] = j + 1;
    while (true) {
        ShufflePattern pat;
        pat.phi = phi;
        pat.psi.reserve(l);
        for (std::size_t i = 1, j = 0; i <= n; ++i) {
            if (j < k && phi[j] == i) {
                ++j;
            } else {
                pat.psi.push_back(i);
            }
        }
        out.push_back(std::move(pat));

        std::size_t j = k;
        while (j > 0 && phi[j - 1] == n - k + j) --j;
        if (j == 0) break;
        ++phi[j - 1];
        for (std::size_t m = j; m < k; ++m) phi[m] = phi[m - 1] + 1;
    }
    return out;
}

std::vector<Variable> merge_variables(std::span<const Variable> u, std::span<const Variable> v,
                                      const ShufflePattern& pat) {
    if (u.size() != pat.phi.size() || v.size() != pat.psi.size()) {
        throw Error(ErrorCode::InvalidArgument, "variable vectors do not match the pattern");
    }
    std::vector<Variable> out;
    out.reserve(pat.size());
    std::size_t a = 0, b = 0;
    for (std::size_t i = 1; i <= pat.size(); ++i) {
        if (a < u.size() && pat.phi[a] == i) {
            out.push_back(u[a++]);
        } else {
            out.push_back(v[b++]);
        }
    }
    return out;
}

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

namespace {

// Per-pattern lookup tables, all 0-based by position.
struct PatternLayout {
    std::vector<bool> from_first;       // position came from phi
    std::vector<std::size_t> index;     // j with phi(j) or psi(j) equal to the position
    std::vector<std::size_t> first_upto;   // |phi^-1([i])|
    std::vector<std::size_t> second_upto;  // |psi^-1([i])|

    explicit PatternLayout(const ShufflePattern& pat)
        : from_first(pat.size()), index(pat.size()), first_upto(pat.size()), second_upto(pat.size()) {
        for (std::size_t j = 0; j < pat.phi.size(); ++j) {
            from_first[pat.phi[j] - 1] = true;
            index[pat.phi[j] - 1] = j;
        }
        for (std::size_t j = 0; j < pat.psi.size(); ++j) index[pat.psi[j] - 1] = j;
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < pat.size(); ++i) {
            (from_first[i] ? a : b) += 1;
            first_upto[i] = a;
            second_upto[i] = b;
        }
    }
};

std::vector<long> prefix_sums(const std::vector<int>& parts) {
    std::vector<long> out(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) out[i + 1] = out[i] + parts[i];
    return out;
}

// Factor at 0-based position `pos`; `t_prefix` holds T_0..T_n.
mpz_class position_factor(const PatternLayout& lay, const std::vector<int>& r, const std::vector<int>& s,
                          const std::vector<long>& r_prefix, const std::vector<long>& s_prefix,
                          const std::vector<int>& t, const std::vector<long>& t_prefix, std::size_t pos) {
    const long upper = t[pos] - 1;
    const bool same_source = pos == 0 || lay.from_first[pos - 1] == lay.from_first[pos];
    if (same_source) {
        const int h = lay.from_first[pos] ? r[lay.index[pos]] : s[lay.index[pos]];
        return binomial(upper, h - 1);
    }
    const long lower = t_prefix[pos + 1] - r_prefix[lay.first_upto[pos]] - s_prefix[lay.second_upto[pos]];
    return binomial(upper, lower);
}

void check_position(const ShufflePattern& pat, std::size_t i) {
    if (i < 1 || i > pat.size()) throw Error(ErrorCode::InvalidArgument, "position out of range");
}

void check_shapes(const ShufflePattern& pat, const Composition& r, const Composition& s) {
    if (r.depth() != pat.phi.size() || s.depth() != pat.psi.size()) {
        throw Error(ErrorCode::InvalidArgument, "compositions do not match the pattern");
    }
}

// Everything a worker needs to evaluate cells without touching shared state.
struct ProductTables {
    std::vector<ShufflePattern> patterns;
    std::vector<PatternLayout> layouts;
    std::vector<std::vector<Variable>> merged;
    std::vector<Composition> splits;
    std::vector<std::vector<long>> split_prefix;
    std::vector<long> r_prefix, s_prefix;
    const std::vector<int>* r = nullptr;
    const std::vector<int>* s = nullptr;

    ProductTables(const StarPair& p, const StarPair& q) {
        if (!disjoint(p, q)) throw Error(ErrorCode::VariableCollision, "factors share a variable");
        r = &p.exponents().parts();
        s = &q.exponents().parts();
        patterns = enumerate_patterns(p.depth(), q.depth());
        for (const auto& pat : patterns) {
            layouts.emplace_back(pat);
            merged.push_back(merge_variables(p.variables(), q.variables(), pat));
        }
        splits = compositions_of(weight(p) + weight(q), p.depth() + q.depth());
        for (const auto& t : splits) split_prefix.push_back(prefix_sums(t.parts()));
        r_prefix = prefix_sums(*r);
        s_prefix = prefix_sums(*s);
    }

    std::size_t cells() const { return patterns.size() * splits.size(); }

    void accumulate(std::size_t cell, LinComb<StarPair>& into) const {
        const std::size_t pi = cell / splits.size();
        const std::size_t ti = cell % splits.size();
        const auto& t = splits[ti].parts();
        mpz_class coef = 1;
        for (std::size_t pos = 0; pos < t.size() && coef != 0; ++pos) {
            coef *= position_factor(layouts[pi], *r, *s, r_prefix, s_prefix, t, split_prefix[ti], pos);
        }
        if (coef != 0) into.add(StarPair(splits[ti], merged[pi]), coef);
    }
};

}  // namespace

int h_value(const ShufflePattern& pat, const Composition& r, const Composition& s, std::size_t i) {
    check_position(pat, i);
    check_shapes(pat, r, s);
    PatternLayout lay(pat);
    return lay.from_first[i - 1] ? r[lay.index[i - 1]] : s[lay.index[i - 1]];
}

mpz_class coefficient(const ShufflePattern& pat, const Composition& r, const Composition& s,
                      const Composition& t, std::size_t i) {
    check_position(pat, i);
    check_shapes(pat, r, s);
    if (t.depth() != pat.size()) throw Error(ErrorCode::InvalidArgument, "split has the wrong length");
    PatternLayout lay(pat);
    return position_factor(lay, r.parts(), s.parts(), prefix_sums(r.parts()), prefix_sums(s.parts()),
                           t.parts(), prefix_sums(t.parts()), i - 1);
}

mpz_class cell_coefficient(const ShufflePattern& pat, const Composition& r, const Composition& s,
                           const Composition& t) {
    mpz_class out = 1;
    for (std::size_t i = 1; i <= pat.size() && out != 0; ++i) out *= coefficient(pat, r, s, t, i);
    return out;
}

LinComb<StarPair> closed_form_product_serial(const StarPair& p, const StarPair& q) {
    const ProductTables tables(p, q);
    LinComb<StarPair> out;
    for (std::size_t cell = 0; cell < tables.cells(); ++cell) tables.accumulate(cell, out);
    return out;
}

LinComb<StarPair> closed_form_product(const StarPair& p, const StarPair& q) {
#ifdef _OPENMP
    const ProductTables tables(p, q);
    const auto ncells = static_cast<long>(tables.cells());
    std::vector<LinComb<StarPair>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
        for (long cell = 0; cell < ncells; ++cell) {
            tables.accumulate(static_cast<std::size_t>(cell), local);
        }
    }
    LinComb<StarPair> out;
    for (const auto& part : partial) out += part;
    return out;
#else
    return closed_form_product_serial(p, q);
#endif
}

LinComb<StarPair> euler_decomposition(int i, int j) {
    if (i < 1 || j < 1) throw Error(ErrorCode::InvalidArgument, "exponents must be >= 1");
    return closed_form_product(StarPair(Composition{i}, {Variable("m")}),
                               StarPair(Composition{j}, {Variable("n")}));
}

}  // namespace mzvfrac
