#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "mzvfrac/error.hpp"
#include "mzvfrac/format.hpp"
#include "mzvfrac/words.hpp"

namespace mzvfrac {
namespace {

const Variable u("u"), v("v"), w("w");
const Letter X0 = Letter::x0();
const Letter Xu = Letter::of(u), Xv = Letter::of(v), Xw = Letter::of(w);

TEST(Variable, InternedEqualityAndOrder) {
    EXPECT_EQ(Variable("abc"), Variable("abc"));
    EXPECT_EQ(&Variable("abc").name(), &Variable("abc").name());
    EXPECT_LT(Variable("a"), Variable("b"));
    EXPECT_LT(Variable("v1"), Variable("v2"));
    EXPECT_LT(Variable("u2"), Variable("v1"));
}

TEST(Variable, RejectsBadNames) {
    EXPECT_THROW(Variable(""), Error);
    EXPECT_THROW(Variable("1u"), Error);
    EXPECT_THROW(Variable("u-1"), Error);
    EXPECT_NO_THROW(Variable("u_1x"));
}

TEST(Composition, WeightDepthAndValidation) {
    const Composition c{2, 1, 3};
    EXPECT_EQ(c.weight(), 6);
    EXPECT_EQ(c.depth(), 3u);
    EXPECT_EQ(Composition().weight(), 0);
    EXPECT_EQ(Composition().depth(), 0u);
    EXPECT_THROW(Composition({1, 0}), Error);
}

TEST(Composition, EnumerationCountsAndColexOrder) {
    const auto all = compositions_of(6, 3);
    ASSERT_EQ(all.size(), 10u);  // C(5,2)
    EXPECT_EQ(all.front(), (Composition{4, 1, 1}));
    EXPECT_EQ(all.back(), (Composition{1, 1, 4}));
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto& a = all[i - 1].parts();
        const auto& b = all[i].parts();
        EXPECT_TRUE(std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend()));
    }
    EXPECT_TRUE(compositions_of(2, 3).empty());
    EXPECT_EQ(compositions_of(0, 0).size(), 1u);
}

TEST(Letter, X0SortsFirst) {
    EXPECT_LT(X0, Xu);
    EXPECT_LT(Xu, Xv);
    EXPECT_EQ(Letter::of(Variable("u")), Xu);
    EXPECT_NE(X0, Xu);
}

TEST(Word, Concat) {
    EXPECT_EQ(concat(Word{}, Word{Xu}), (Word{Xu}));
    EXPECT_EQ(concat(Word{X0}, Word{Xu, Xv}), (Word{X0, Xu, Xv}));
    EXPECT_EQ(concat(Word{Xu}, Word{Xu}), (Word{Xu, Xu}));
}

TEST(Word, OrderIsLengthThenLex) {
    EXPECT_LT((Word{Xw}), (Word{X0, Xu}));
    EXPECT_LT((Word{X0, Xv}), (Word{Xu, Xu}));
    EXPECT_TRUE((Word{}).admissible());
    EXPECT_FALSE((Word{Xu, X0}).admissible());
}

TEST(Rho, Decode) {
    EXPECT_EQ(rho_decode(Word{X0, Xu, Xv}), StarPair({2, 1}, {u, v}));
    EXPECT_EQ(rho_decode(Word{}), StarPair());
    EXPECT_EQ(rho_decode(Word{X0, X0, Xw}), StarPair({3}, {w}));
    EXPECT_EQ(rho_encode(StarPair({3}, {w})), (Word{X0, X0, Xw}));
}

TEST(Rho, DecodeRejectsTrailingX0) {
    try {
        rho_decode(Word{Xu, X0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAdmissible);
    }
}

TEST(Rho, Encode) {
    EXPECT_EQ(rho_encode(StarPair({1, 1}, {u, v})), (Word{Xu, Xv}));
    EXPECT_EQ(rho_encode(StarPair({2, 1}, {u, v})), (Word{X0, Xu, Xv}));
    EXPECT_EQ(rho_encode(StarPair({3}, {w})), (Word{X0, X0, Xw}));
}

TEST(StarPair, Weight) {
    EXPECT_EQ(weight(StarPair({2, 1}, {u, v})), 3);
    EXPECT_EQ(weight(StarPair()), 0);
    EXPECT_EQ(weight(StarPair({5}, {u})), 5);
}

TEST(StarPair, LengthMismatchAndDistinctness) {
    EXPECT_THROW(StarPair({1, 2}, {u}), Error);
    EXPECT_TRUE(StarPair({1, 2}, {u, v}).has_distinct_variables());
    EXPECT_FALSE(StarPair({1, 2}, {u, u}).has_distinct_variables());
    EXPECT_TRUE(disjoint(StarPair({1}, {u}), StarPair({1}, {v})));
    EXPECT_FALSE(disjoint(StarPair({1, 1}, {u, w}), StarPair({1}, {w})));
}

TEST(StarPair, OrderIsVariablesThenExponents) {
    EXPECT_LT(StarPair({3, 1}, {u, v}), StarPair({1, 1}, {v, u}));
    EXPECT_LT(StarPair({2, 2}, {u, v}), StarPair({3, 1}, {u, v}));
}

TEST(RhoProperty, WordRoundTripExhaustive) {
    const auto words = testing::all_words({X0, Xu, Xv, Xw}, 8);
    std::size_t checked = 0;
    for (const auto& word : words) {
        if (!word.admissible()) continue;
        ASSERT_EQ(rho_encode(rho_decode(word)), word);
        ++checked;
    }
    EXPECT_GT(checked, 60000u);
}

TEST(RhoProperty, PairRoundTripAndAdmissibility) {
    const std::vector<Variable> pool{u, v, w};
    for (int wt = 0; wt <= 8; ++wt) {
        for (std::size_t d = 0; d <= static_cast<std::size_t>(wt); ++d) {
            for (const auto& c : compositions_of(wt, d)) {
                // every assignment of the 3 variables to the d blocks
                std::vector<std::size_t> idx(d, 0);
                while (true) {
                    std::vector<Variable> vars;
                    for (auto i : idx) vars.push_back(pool[i]);
                    const StarPair p(c, vars);
                    const Word enc = rho_encode(p);
                    ASSERT_TRUE(enc.admissible());
                    ASSERT_EQ(enc.size(), static_cast<std::size_t>(wt));
                    ASSERT_EQ(rho_decode(enc), p);
                    std::size_t k = 0;
                    while (k < d && idx[k] == 2) idx[k++] = 0;
                    if (k == d) break;
                    ++idx[k];
                }
            }
        }
    }
}

TEST(LinComb, AddThenSubtractIsIdentity) {
    LinComb<StarPair> base{{StarPair({2}, {u}), 3}, {StarPair({1, 1}, {u, v}), -2}};
    const LinComb<StarPair> original = base;
    const LinComb<StarPair> extra{{StarPair({1, 1}, {u, v}), 2}, {StarPair({4}, {w}), 7}};
    base += extra;
    base -= extra;
    EXPECT_EQ(base, original);
    EXPECT_EQ(base.size(), original.size());
}

TEST(LinComb, DropsZeroCoefficientsAndIteratesCanonically) {
    LinComb<Word> l;
    l.add(Word{Xu, Xv}, 1);
    l.add(Word{Xw}, 2);
    l.add(Word{X0, Xu}, 5);
    l.add(Word{Xu, Xv}, -1);
    ASSERT_EQ(l.size(), 2u);
    EXPECT_EQ(l.coefficient(Word{Xu, Xv}), 0);
    auto it = l.begin();
    EXPECT_EQ(it->first, (Word{Xw}));
    ++it;
    EXPECT_EQ(it->first, (Word{X0, Xu}));
    EXPECT_EQ(l.total_multiplicity(), 7);
    l *= 0;
    EXPECT_TRUE(l.empty());
}

}  // namespace
}  // namespace mzvfrac
