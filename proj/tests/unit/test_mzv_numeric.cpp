#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "brute_force.hpp"
#include "mzvfrac/closed_form.hpp"
#include "mzvfrac/error.hpp"
#include "mzvfrac/mzv_numeric.hpp"

namespace mzvfrac {
namespace {

const Variable u("u"), v("v"), w("w"), m("m"), n("n");

StarPair fresh(const Composition& s) {
    const std::vector<Variable> pool{u, v, w, Variable("x")};
    return StarPair(s, std::vector<Variable>(pool.begin(), pool.begin() + static_cast<long>(s.depth())));
}

bool not_admissible(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == ErrorCode::NotAdmissible;
    }
    return false;
}

TEST(TruncationSpec, RejectsZero) { EXPECT_THROW(TruncationSpec(0), Error); }

TEST(ZetaTruncated, Basel) {
    EXPECT_NEAR(zeta_truncated(Composition{2}, TruncationSpec(1000)), 1.6439345666815597, 1e-12);
    EXPECT_NEAR(std::numbers::pi * std::numbers::pi / 6 - zeta_truncated(Composition{2}, TruncationSpec(1000)),
                1e-3, 1e-6);
    EXPECT_EQ(zeta_truncated(Composition{2}, TruncationSpec(1)), 1.0);
}

TEST(ZetaTruncated, TwoOneApproachesZetaThree) {
    EXPECT_NEAR(zeta_truncated(Composition{2, 1}, TruncationSpec(10000)), 1.2020569031595942, 2e-3);
}

TEST(ZetaTruncated, RejectsDivergent) {
    EXPECT_TRUE(not_admissible([] { zeta_truncated(Composition{1, 2}, TruncationSpec(10)); }));
    EXPECT_TRUE(not_admissible([] { zeta_truncated(Composition{}, TruncationSpec(10)); }));
}

TEST(ZetaTruncated, MatchesNestedLoops) {
    for (const auto& s : {Composition{2}, Composition{3, 1}, Composition{2, 1, 1}, Composition{2, 2, 1}}) {
        EXPECT_NEAR(zeta_truncated(s, TruncationSpec(60)), testing::brute_force_zeta(s.parts(), 60), 1e-12);
        EXPECT_NEAR(serial::zeta_truncated(s, TruncationSpec(60)), testing::brute_force_zeta(s.parts(), 60), 1e-12);
    }
}

TEST(ZetaTruncated, NondecreasingInCutoff) {
    for (const auto& s : {Composition{2}, Composition{2, 1}, Composition{3, 1, 1}}) {
        double prev = 0;
        for (std::size_t N : {1, 2, 5, 10, 64, 65, 100, 500, 1000}) {
            const double cur = zeta_truncated(s, TruncationSpec(N));
            EXPECT_GE(cur, prev);
            prev = cur;
        }
    }
}

TEST(FractionSum, Examples) {
    EXPECT_EQ(fraction_sum_truncated(StarPair({2}, {u}), TruncationSpec(1)), 1.0);
    EXPECT_TRUE(not_admissible([] { fraction_sum_truncated(StarPair({1, 1}, {u, v}), TruncationSpec(50)); }));
    EXPECT_NEAR(fraction_sum_truncated(StarPair({2, 2}, {u, v}), TruncationSpec(2000)), 0.8117424252833535, 5e-3);
}

TEST(FractionSum, MatchesOrthantLoops) {
    for (const auto& s : {Composition{2}, Composition{2, 1}, Composition{3, 2}, Composition{2, 1, 1}}) {
        const int N = 25;
        EXPECT_NEAR(fraction_sum_truncated(fresh(s), TruncationSpec(N)), testing::brute_force_fraction_sum(s.parts(), N), 1e-12);
        EXPECT_NEAR(serial::fraction_sum_truncated(fresh(s), TruncationSpec(N)),
                    testing::brute_force_fraction_sum(s.parts(), N), 1e-12);
    }
}

TEST(FractionSum, SerialAndParallelAgree) {
    for (const auto& s : {Composition{2, 1}, Composition{2, 1, 1}, Composition{4}}) {
        const TruncationSpec spec(3000);
        EXPECT_NEAR(fraction_sum_truncated(fresh(s), spec), serial::fraction_sum_truncated(fresh(s), spec), 1e-11);
        EXPECT_NEAR(zeta_truncated(s, spec), serial::zeta_truncated(s, spec), 1e-11);
    }
}

TEST(FractionSum, TruncationGapShrinks) {
    const std::size_t N = 2000;
    for (int wt = 2; wt <= 4; ++wt) {
        for (std::size_t d = 1; d < static_cast<std::size_t>(wt); ++d) {
            for (const auto& s : compositions_of(wt, d)) {
                if (s[0] < 2) continue;
                const double gap = std::abs(zeta_truncated(s, TruncationSpec(N)) -
                                            fraction_sum_truncated(fresh(s), TruncationSpec(N)));
                EXPECT_LT(gap, 10.0 / N) << "depth " << d << " weight " << wt;
            }
        }
    }
}

TEST(CheckSummed, EulerTwoTwo) {
    const TruncationSpec spec(10000);
    const auto v = check_summed_identity(StarPair({2}, {m}), StarPair({2}, {n}), euler_decomposition(2, 2), spec, 1e-3);
    EXPECT_TRUE(v.pass);
    EXPECT_NEAR(v.lhs, 2.7058080842778454, 1e-3);
}

TEST(CheckSummed, EulerTwoThree) {
    const auto v = check_summed_identity(StarPair({2}, {m}), StarPair({3}, {n}), euler_decomposition(2, 3),
                                         TruncationSpec(10000), 1e-3);
    EXPECT_TRUE(v.pass);
    EXPECT_LT(v.gap, 1e-3);
}

TEST(CheckSummed, WrongCoefficientFails) {
    const LinComb<StarPair> wrong{{StarPair({2, 2}, {m, n}), 2}, {StarPair({3, 1}, {m, n}), 3}};
    const auto v = check_summed_identity(StarPair({2}, {m}), StarPair({2}, {n}), wrong, TruncationSpec(10000), 1e-3);
    EXPECT_FALSE(v.pass);
    EXPECT_NEAR(v.gap, 0.2705808084, 1e-3);
}

TEST(CheckSummed, RejectsDivergentTerms) {
    EXPECT_TRUE(not_admissible([] {
        check_summed_identity(StarPair({1}, {m}), StarPair({2}, {n}), euler_decomposition(1, 2), TruncationSpec(10), 1);
    }));
}

}  // namespace
}  // namespace mzvfrac
