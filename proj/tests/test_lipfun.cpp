#include "lipwb/errors.hpp"
#include "lipwb/lipfun.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lipwb;

TEST(LipFun, ConstructorChecks) {
    auto sp = integer_space(3);
    EXPECT_THROW(LipschitzFunction(sp, {Q(1), Q(0), Q(0)}), DomainError);
    EXPECT_THROW(LipschitzFunction(sp, {Q(0), Q(0)}), DomainError);
    EXPECT_TRUE(LipschitzFunction::zero(sp).is_zero());
}

TEST(LipFun, SlopeAndNorm) {
    auto sp = integer_space(4);
    LipschitzFunction f(sp, {Q(0), Q(1), Q(1), Q(4)});
    EXPECT_EQ(slope(f, 0, 1), Q(1));
    EXPECT_EQ(slope(f, 3, 2), Q(-3));
    EXPECT_EQ(lip_norm(f), Q(3));
    EXPECT_EQ(pointwise_sup(f, 0), Q(4, 3));
    EXPECT_THROW(slope(f, 1, 1), DomainError);
}

TEST(LipFun, AttainmentReport) {
    auto sp = integer_space(3);
    LipschitzFunction f(sp, {Q(0), Q(-1), Q(0)});
    auto r = attainment_report(f);
    EXPECT_EQ(r.norm, Q(1));
    // slope(1,0) = 1 and slope(1,2) = 1 are the positive orientations
    EXPECT_EQ(r.strong_pairs, (std::vector<IndexPair>{{1, 0}, {0, 1}, {1, 2}, {2, 1}}));
    EXPECT_EQ(r.pointwise_sup, (QVec{Q(1), Q(1), Q(1)}));
    EXPECT_EQ(r.pointwise_defect, (QVec{Q(0), Q(0), Q(0)}));
}

TEST(LipFun, CombineAddScale) {
    auto sp = discrete_space(4);
    std::vector<LipschitzFunction> fam{LipschitzFunction(sp, {0, 1, 0, 0}), LipschitzFunction(sp, {0, 0, 1, 0})};
    auto f = combine(fam, {Q(2), Q(-1)});
    EXPECT_EQ(f.values, (QVec{0, 2, -1, 0}));
    EXPECT_EQ(add(fam[0], fam[1]).values, (QVec{0, 1, 1, 0}));
    EXPECT_EQ(scale(Q(-3), fam[0]).values, (QVec{0, -3, 0, 0}));
    EXPECT_THROW(combine(fam, {1, 2, 3}), DomainError);
}

TEST(LipFun, MatchesBruteForceOnRandomSpaces) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto sp = random_metric(rng, 2 + rng() % 6);
        QVec v(sp->size());
        for (std::size_t i = 1; i < v.size(); ++i) v[i] = random_rational(rng, -3, 3, 6);
        LipschitzFunction f(sp, v);
        EXPECT_EQ(lip_norm(f), oracle::lip_norm(sp->dist, v));
        for (std::size_t p = 0; p < v.size(); ++p) EXPECT_EQ(pointwise_sup(f, p), oracle::pointwise_sup(sp->dist, v, p));
    }
}
