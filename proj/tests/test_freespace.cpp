#include "lipwb/assignment.hpp"
#include "lipwb/embeddings.hpp"
#include "lipwb/errors.hpp"
#include "lipwb/freespace.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lipwb;

namespace {

QVec dense(const FreeElement& mu) {
    QVec w(mu.space->size(), Q(0));
    for (const auto& [k, v] : mu.weights) w[k] = v;
    return w;
}

FreeElement random_element(std::mt19937_64& rng, SpacePtr sp) {
    std::map<std::size_t, Q> w;
    for (std::size_t k = 0; k < sp->size(); ++k)
        if (rng() % 3) w[k] = random_rational(rng, -3, 3, 6);
    return FreeElement(sp, w);
}

}  // namespace

TEST(FreeElement, ArithmeticDropsZeros) {
    auto sp = integer_space(4);
    auto a = FreeElement::molecule(sp, 1, 3);
    EXPECT_EQ(a.weights, (std::map<std::size_t, Q>{{1, Q(1, 2)}, {3, Q(-1, 2)}}));
    auto z = add(a, scale(Q(-1), a));
    EXPECT_TRUE(z.empty());
    EXPECT_THROW(FreeElement::molecule(sp, 2, 2), DomainError);
}

TEST(FreeNorm, MoleculeHasNormOne) {
    auto sp = truncate(catalog("example33"), 7);
    for (std::size_t p = 0; p < 7; ++p)
        for (std::size_t q = 0; q < 7; ++q)
            if (p != q) EXPECT_EQ(free_norm_lp(FreeElement::molecule(sp, p, q)).norm, Q(1));
}

TEST(FreeNorm, LpFlowAndOracleAgree) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        auto sp = random_metric(rng, 2 + rng() % 5);
        auto mu = random_element(rng, sp);
        auto lp = free_norm_lp(mu);
        EXPECT_EQ(lp.norm, free_norm_flow(mu));
        EXPECT_EQ(lp.norm, oracle::free_norm(sp->dist, dense(mu)));
        EXPECT_LE(lip_norm(lp.witness), Q(1));
        EXPECT_EQ(pairing(mu, lp.witness), lp.norm);
    }
}

// Two molecules whose sum is shorter than 2 because crossing the pairs is cheaper.
TEST(FreeNorm, Dmqr41CrossedPairs) {
    auto sp = truncate(catalog("dmqr41"), 6);
    auto mu = molecule_sum(sp, {{{0, 1}, {2, 3}}, {}});
    EXPECT_EQ(oracle::free_norm(sp->dist, dense(mu)), Q(17, 9));
    EXPECT_EQ(free_norm_lp(mu).norm, Q(17, 9));
    EXPECT_EQ(free_norm_flow(mu), Q(17, 9));
}

TEST(FreeNorm, Example35Witness) {
    auto sp = truncate(catalog("example35"), 6);
    FreeElement mu(sp, {{1, Q(1)}, {2, Q(-1)}, {4, Q(2)}});
    EXPECT_EQ(oracle::free_norm(sp->dist, dense(mu)), Q(5));
    auto r = free_norm_lp(mu);
    EXPECT_EQ(r.norm, Q(5));
    EXPECT_EQ(r.witness.values, (QVec{Q(0), Q(2), Q(-1, 2), Q(-1, 3), Q(5, 4), Q(-1, 5)}));
}

TEST(Matching, SwapIsCheaperOnDmqr41) {
    auto sp = truncate(catalog("dmqr41"), 6);
    auto mc = matching_min_check(*sp, {{0, 1}, {2, 3}});
    QMat cost{{sp->d(0, 1), sp->d(0, 3)}, {sp->d(2, 1), sp->d(2, 3)}};
    auto [best, perm] = oracle::min_matching(cost);
    EXPECT_FALSE(mc.identity_optimal);
    EXPECT_EQ(mc.identity_cost, Q(11, 4));
    EXPECT_EQ(mc.best_cost, best);
    EXPECT_EQ(best, Q(31, 12));
    EXPECT_EQ(mc.witness, perm);
    EXPECT_EQ(perm, (std::vector<std::size_t>{1, 0}));
}

TEST(Matching, IdentityOptimalOnDiscrete) {
    auto sp = truncate(catalog("discrete"), 9);
    EXPECT_TRUE(matching_min_check(*sp, {{1, 2}, {3, 4}, {5, 6}}).identity_optimal);
}

TEST(Assignment, ExhaustiveAndHungarianMatchOracle) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng() % 6;
        QMat c(n, QVec(n));
        for (auto& row : c)
            for (auto& x : row) x = random_rational(rng, 0, 5, 4);
        auto [best, perm] = oracle::min_matching(c);
        auto ex = min_assignment_exhaustive(c);
        EXPECT_EQ(ex.cost, best);
        EXPECT_EQ(ex.perm, perm);  // both lexicographically first
        EXPECT_EQ(min_assignment_hungarian(c).cost, best);
    }
}

TEST(Thm310, Verdicts) {
    EXPECT_TRUE(check_thm310(catalog("dmqr41"), 12).passed);
    auto e48 = check_thm310(catalog("example48"), 12);
    EXPECT_FALSE(e48.passed);
    EXPECT_EQ(e48.failed_clause, "ii");
    EXPECT_EQ(check_thm310(catalog("prop24"), 12).failed_clause, "uniformly-discrete");
    EXPECT_THROW(check_thm310(pow4_model(), 12), LimitsUnavailable);
}

TEST(Complementation, DisjointPairsInDiscreteSpace) {
    auto sp = truncate(catalog("discrete"), 9);
    std::vector<IndexPair> pairs{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    auto fam = build_thm34(sp, pairs);
    std::mt19937_64 rng(23);
    std::vector<FreeElement> samples;
    for (int i = 0; i < 30; ++i) samples.push_back(random_element(rng, sp));
    auto rep = complementation_test({pairs, {}}, fam.members, samples);
    EXPECT_TRUE(rep.passed);
    EXPECT_EQ(rep.samples, 30u);
    // the projection fixes the span of the molecules
    auto m = molecule_sum(sp, {pairs, {1, -1, 1, 1}});
    EXPECT_EQ(project({pairs, {}}, fam.members, m).weights, m.weights);
}

TEST(Complementation, RejectsOversizedDuals) {
    auto sp = integer_space(3);
    LipschitzFunction big(sp, {0, 2, 0});
    EXPECT_THROW(complementation_test({{{1, 2}}, {}}, {big}, {FreeElement::delta(sp, 1)}), PreconditionError);
}
