#include "lipwb/errors.hpp"
#include "lipwb/pipeline.hpp"

#include <gtest/gtest.h>

using namespace lipwb;

namespace {

// Separated-points selection on x_k = 4^k written against plain integers:
// keep the first x that is farther than n * max(d + c) from every chosen point.
std::vector<mpz_class> pow4_selection(unsigned N) {
    std::vector<mpz_class> x(N);
    for (unsigned k = 0; k < N; ++k) mpz_ui_pow_ui(x[k].get_mpz_t(), 4, k + 1);
    std::vector<unsigned> chosen{0};
    std::vector<mpz_class> c{1};
    std::vector<bool> taken(N, false);
    taken[0] = true;
    for (;;) {
        mpz_class M = 0, diam = 0;
        for (std::size_t a = 0; a < chosen.size(); ++a)
            for (unsigned b : chosen) {
                mpz_class d = abs(x[chosen[a]] - x[b]);
                if (d + c[a] > M) M = d + c[a];
                if (d > diam) diam = d;
            }
        int pick = -1;
        for (unsigned k = 0; k < N && pick < 0; ++k) {
            if (taken[k]) continue;
            bool far = true;
            for (unsigned j : chosen) far = far && abs(x[k] - x[j]) > M * static_cast<unsigned long>(chosen.size());
            if (far) pick = static_cast<int>(k);
        }
        if (pick < 0) break;
        taken[pick] = true;
        chosen.push_back(static_cast<unsigned>(pick));
        for (unsigned j : chosen) {
            mpz_class d = abs(x[pick] - x[j]);
            if (d > diam) diam = d;
        }
        c.push_back(diam - M);
    }
    return c;
}

}  // namespace

TEST(Pipeline, CaseNames) {
    EXPECT_EQ(to_string(MainCase::BoundedA), "I-(i)");
    EXPECT_EQ(to_string(MainCase::BoundedB), "I-(ii)");
    EXPECT_EQ(to_string(MainCase::Unbounded), "II");
}

TEST(Pipeline, Example48PairedSubsequence) {
    auto res = main_theorem_pipeline(catalog("example48"), 30);
    EXPECT_EQ(res.which, MainCase::BoundedB);
    EXPECT_EQ(res.sigma, (std::vector<long>{1, 5, 9, 13, 17, 21, 25, 29}));
    for (std::size_t k = 0; k < res.sigma.size(); ++k) EXPECT_EQ(res.tau[k], res.sigma[k] + 1);
    ASSERT_GE(res.pair_eps.size(), 3u);
    EXPECT_EQ(res.pair_eps[0], Q(1, 54));
    EXPECT_EQ(res.pair_eps[1], Q(1, 4374));
    EXPECT_EQ(res.pair_eps[2], Q(1, 354294));
    EXPECT_EQ(res.subspace_indices.front(), 3);
    const auto& f1 = res.family.members[0];
    EXPECT_EQ(f1(res.family.anchors[0].first), Q(11, 18));
    EXPECT_EQ(f1(res.family.anchors[0].second), Q(-5, 6));
    EXPECT_EQ(res.family.members.size(), 8u);
    EXPECT_TRUE(res.invariants_hold());
    EXPECT_TRUE(res.report.exact_pass);
}

TEST(Pipeline, Dmqr41ShiftedEps) {
    auto res = main_theorem_pipeline(catalog("dmqr41"), 30);
    EXPECT_EQ(res.which, MainCase::BoundedA);
    ASSERT_FALSE(res.eps.empty());
    // eps_n = d(p_n, p_1) - L/2 = 1/2 + 1/n
    for (const auto& [n, e] : res.eps) EXPECT_EQ(e, Q(1, 2) + Q(1, n));
    EXPECT_EQ(res.family.theorem, "main-I-(i)");
    EXPECT_EQ(res.family.members.size(), 3u);
    EXPECT_TRUE(res.family.limit_family);
    EXPECT_TRUE(res.invariants_hold());
    EXPECT_TRUE(res.report.norm_bounded);
    EXPECT_TRUE(res.report.residue_pass);
}

TEST(Pipeline, Pow4SeparatedPoints) {
    auto res = main_theorem_pipeline(pow4_model(), 30);
    EXPECT_EQ(res.which, MainCase::Unbounded);
    auto want = pow4_selection(30);
    ASSERT_EQ(res.c.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(res.c[k], Q(want[k])) << k;
    ASSERT_EQ(res.c.size(), 13u);
    EXPECT_EQ(res.c[1], Q(11));
    EXPECT_EQ(res.c[3], Q(923));
    EXPECT_EQ(res.c[12], Q(mpz_class("69840437304129637")));
    EXPECT_EQ(res.family.members.size(), 2u);
    EXPECT_TRUE(res.invariants_hold());
    EXPECT_TRUE(res.report.norm_bounded);
}

TEST(Pipeline, MixedPairsRaiseDichotomyError) {
    try {
        main_theorem_pipeline(catalog("example33"), 12);
        FAIL() << "expected a dichotomy error";
    } catch (const DichotomyError& e) {
        EXPECT_EQ(e.values.size(), 2u);
        EXPECT_LT(e.n, e.m);
    }
}

TEST(Pipeline, Guards) {
    EXPECT_THROW(main_theorem_pipeline(catalog("prop24"), 12), DomainError);
    EXPECT_THROW(main_theorem_pipeline(catalog("thm51star"), 8), LimitsUnavailable);
}

TEST(Pipeline, CustomBatteryIsUsed) {
    Battery b = standard_battery(2, 2, 5, 99);
    auto res = main_theorem_pipeline(catalog("dmqr41"), 16, b);
    EXPECT_EQ(res.report.coeff_count, b.vectors.size());
    EXPECT_EQ(res.report.seed, 99u);
}
