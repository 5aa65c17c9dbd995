#include "mzvfrac/mzv_numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "mzvfrac/error.hpp"

namespace mzvfrac {

TruncationSpec::TruncationSpec(std::size_t cutoff) : cutoff_(cutoff) {
    if (cutoff < 1) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 1");
}

namespace {

void require_admissible(const Composition& s) {
    if (s.empty()) throw Error(ErrorCode::NotAdmissible, "empty composition");
    if (s[0] < 2) throw Error(ErrorCode::NotAdmissible, "leading exponent must be >= 2");
}

double inv_pow(std::size_t n, int s) { return std::pow(static_cast<double>(n), -s); }

// Fixed block count so that every reduction has the same shape regardless
// of the number of threads.
constexpr std::size_t kBlocks = 64;

struct Blocks {
    std::size_t first, last;  // index range [first, last]
    std::size_t count() const { return std::min(kBlocks, last - first + 1); }
    std::size_t begin(std::size_t b) const { return first + (last - first + 1) * b / count(); }
    std::size_t end(std::size_t b) const { return first + (last - first + 1) * (b + 1) / count(); }
};

// Replaces v[first..last] by its inclusive prefix sums.
void inclusive_scan_blocked(std::vector<double>& v, Blocks blk) {
    const auto nb = static_cast<long>(blk.count());
    std::vector<double> totals(blk.count(), 0.0);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < nb; ++b) {
        double acc = 0;
        for (std::size_t n = blk.begin(b); n < blk.end(b); ++n) acc += v[n];
        totals[b] = acc;
    }
    std::vector<double> offsets(blk.count(), 0.0);
    for (std::size_t b = 1; b < blk.count(); ++b) offsets[b] = offsets[b - 1] + totals[b - 1];
#pragma omp parallel for schedule(static)
    for (long b = 0; b < nb; ++b) {
        double acc = offsets[b];
        for (std::size_t n = blk.begin(b); n < blk.end(b); ++n) {
            acc += v[n];
            v[n] = acc;
        }
    }
}

double sum_blocked(const std::vector<double>& v, Blocks blk) {
    const auto nb = static_cast<long>(blk.count());
    std::vector<double> totals(blk.count(), 0.0);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < nb; ++b) {
        double acc = 0;
        for (std::size_t n = blk.begin(b); n < blk.end(b); ++n) acc += v[n];
        totals[b] = acc;
    }
    double sum = 0;
    for (double t : totals) sum += t;
    return sum;
}

}  // namespace

double zeta_truncated(const Composition& s, TruncationSpec spec) {
    require_admissible(s);
    const std::size_t N = spec.cutoff();
    const Blocks blk{1, N};
    const auto n_max = static_cast<long>(N);
    // level[n]: sum over n = n_i > n_{i+1} > ... > n_k >= 1, innermost first.
    std::vector<double> level(N + 1, 0.0);
#pragma omp parallel for schedule(static)
    for (long n = 1; n <= n_max; ++n) level[n] = inv_pow(n, s[s.depth() - 1]);
    std::vector<double> prefix;
    for (std::size_t i = s.depth() - 1; i-- > 0;) {
        prefix = level;
        inclusive_scan_blocked(prefix, blk);
        const int e = s[i];
#pragma omp parallel for schedule(static)
        for (long n = 1; n <= n_max; ++n) level[n] = inv_pow(n, e) * prefix[n - 1];
    }
    return sum_blocked(level, blk);
}

double fraction_sum_truncated(const StarPair& p, TruncationSpec spec) {
    const Composition& s = p.exponents();
    require_admissible(s);
    const std::size_t N = spec.cutoff();
    const std::size_t k = s.depth();
    // g[n]: sum over chains with partial sum n at the current block.
    std::vector<double> g(k * N + 1, 0.0);
    const auto n_max = static_cast<long>(N);
#pragma omp parallel for schedule(static)
    for (long n = 1; n <= n_max; ++n) g[n] = inv_pow(n, s[k - 1]);
    std::vector<double> prefix;
    std::size_t reach = N;
    for (std::size_t i = k - 1; i-- > 0;) {
        prefix = g;
        inclusive_scan_blocked(prefix, Blocks{1, reach});
        const std::size_t next_reach = reach + N;
        const int e = s[i];
        const auto hi = static_cast<long>(next_reach);
#pragma omp parallel for schedule(static)
        for (long n = 1; n <= hi; ++n) {
            // previous partial sum m ranges over [n-N, n-1] intersected with [1, reach]
            const auto un = static_cast<std::size_t>(n);
            const std::size_t top = std::min(un - 1, reach);
            const std::size_t bottom = un > N ? un - N : 1;
            const double window = top >= bottom ? prefix[top] - prefix[bottom - 1] : 0.0;
            g[un] = inv_pow(un, e) * window;
        }
        reach = next_reach;
    }
    return sum_blocked(g, Blocks{1, reach});
}

namespace serial {

double zeta_truncated(const Composition& s, TruncationSpec spec) {
    require_admissible(s);
    const std::size_t N = spec.cutoff();
    std::vector<double> level(N + 1, 0.0);
    for (std::size_t n = 1; n <= N; ++n) level[n] = inv_pow(n, s[s.depth() - 1]);
    for (std::size_t i = s.depth() - 1; i-- > 0;) {
        double below = 0;
        for (std::size_t n = 1; n <= N; ++n) {
            const double here = level[n];
            level[n] = inv_pow(n, s[i]) * below;
            below += here;
        }
    }
    double sum = 0;
    for (std::size_t n = 1; n <= N; ++n) sum += level[n];
    return sum;
}

double fraction_sum_truncated(const StarPair& p, TruncationSpec spec) {
    const Composition& s = p.exponents();
    require_admissible(s);
    const std::size_t N = spec.cutoff();
    const std::size_t k = s.depth();
    std::vector<double> g(k * N + 1, 0.0);
    for (std::size_t n = 1; n <= N; ++n) g[n] = inv_pow(n, s[k - 1]);
    std::size_t reach = N;
    for (std::size_t i = k - 1; i-- > 0;) {
        std::vector<double> next(g.size(), 0.0);
        // Sliding window sum of g over [n-N, n-1].
        double window = 0;
        for (std::size_t n = 1; n <= reach + N; ++n) {
            if (n - 1 >= 1 && n - 1 <= reach) window += g[n - 1];
            if (n > N + 1 && n - N - 1 <= reach) window -= g[n - N - 1];
            next[n] = inv_pow(n, s[i]) * window;
        }
        g = std::move(next);
        reach += N;
    }
    double sum = 0;
    for (std::size_t n = 1; n <= reach; ++n) sum += g[n];
    return sum;
}

}  // namespace serial

SummedVerdict check_summed_identity(const StarPair& p, const StarPair& q, const LinComb<StarPair>& rhs,
                                    TruncationSpec spec, double tol) {
    require_admissible(p.exponents());
    require_admissible(q.exponents());
    for (const auto& [term, c] : rhs) require_admissible(term.exponents());

    std::map<Composition, double> cache;
    auto zeta = [&](const Composition& s) {
        auto it = cache.find(s);
        if (it == cache.end()) it = cache.emplace(s, zeta_truncated(s, spec)).first;
        return it->second;
    };

    SummedVerdict v;
    v.lhs = zeta(p.exponents()) * zeta(q.exponents());
    for (const auto& [term, c] : rhs) v.rhs += c.get_d() * zeta(term.exponents());
    v.gap = std::abs(v.lhs - v.rhs);
    v.pass = v.gap <= tol;
    return v;
}

}  // namespace mzvfrac
