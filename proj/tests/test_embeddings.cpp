#include "lipwb/embeddings.hpp"
#include "lipwb/errors.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace lipwb;

namespace {

std::vector<IndexPair> consecutive(std::size_t first, std::size_t count) {
    std::vector<IndexPair> out;
    for (std::size_t g = 0; g < count; ++g) out.emplace_back(first + 2 * g, first + 2 * g + 1);
    return out;
}

Battery small_battery(std::size_t members) {
    return standard_battery(members, std::min<std::size_t>(members, 5), 100, kDefaultSeed);
}

}  // namespace

// --- checkers ---

TEST(Prop31Check, PassesAndFails) {
    auto sp = line_space({Q(0), Q(10), Q(11), Q(20), Q(21)});
    EXPECT_TRUE(check_prop31(*sp, {1, 3}, {2, 4}).passed);
    auto r = check_prop31(*sp, {1}, {3});
    EXPECT_EQ(r.clause, "radius");
    EXPECT_EQ(r.values, (QVec{Q(10), Q(1)}));
    auto disc = discrete_space(5);
    auto s = check_prop31(*disc, {1, 3}, {2, 4});
    EXPECT_EQ(s.clause, "separation");
    EXPECT_EQ(s.witness, (std::vector<std::size_t>{1, 3}));
    EXPECT_THROW(check_prop31(*disc, {1, 1}, {2, 3}), DomainError);
}

TEST(Thm34Check, Clauses) {
    auto disc = truncate(catalog("discrete"), 9);
    EXPECT_TRUE(check_thm34(*disc, consecutive(1, 4)).passed);
    EXPECT_EQ(check_thm34(*integer_space(6), {{1, 4}}).clause, "radius");
    auto sp = line_space({Q(0), Q(10), Q(12), Q(13), Q(15)});
    auto r = check_thm34(*sp, {{1, 2}, {3, 4}});
    EXPECT_EQ(r.clause, "cross");
    EXPECT_EQ(r.values, (QVec{Q(4), Q(2)}));
}

TEST(Thm37Check, Example35PassesExample48Fails) {
    EXPECT_TRUE(check_thm37(*truncate(catalog("example35"), 10), consecutive(1, 4)).passed);
    auto r = check_thm37(*truncate(catalog("example48"), 10), consecutive(0, 5));
    EXPECT_FALSE(r.passed);
    EXPECT_EQ(r.clause, "2");
}

TEST(Prop42Check, SeparatedPoints) {
    EXPECT_TRUE(check_prop42(*integer_space(10), {2, 4, 6, 8}).passed);
    EXPECT_EQ(check_prop42(*integer_space(10), {2, 3}).clause, "separation");
    EXPECT_FALSE(check_prop42(*truncate(catalog("discrete"), 9), {1, 2, 3}).passed);
}

TEST(ModelChecks, Thm43) {
    EXPECT_TRUE(check_thm43(catalog("dmqr41"), 16).passed);
    EXPECT_EQ(check_thm43(catalog("example33"), 16).clause, "i");
    EXPECT_THROW(check_thm43(pow4_model(), 8), LimitsUnavailable);
}

TEST(ModelChecks, Thm45) {
    EXPECT_TRUE(check_thm45(catalog("example44"), 2, 16).passed);
    // d(p_n, 0) -> 1 but pairs stay near distance 1, so 2D fails
    EXPECT_EQ(check_thm45(catalog("example35"), 1, 16).clause, "iii");
    EXPECT_THROW(check_thm45(catalog("dmqr41"), 1, 8), LimitsUnavailable);
}

TEST(ModelChecks, Thm46) {
    auto m44 = catalog("dmqr44");
    EXPECT_TRUE(check_thm46(m44, {m44.eps, std::nullopt}, 16).passed);
    auto zero = [](long) -> Q { return Q(0); };
    // a bounded model needs the tail gap
    auto quarter = [](long n) -> Q { return Q(3, 4) + Q(1, n); };
    EXPECT_THROW(check_thm46(catalog("dmqr41"), {quarter, std::nullopt}, 8), LimitsUnavailable);
    // with eps = 0 the ratio exceeds 1
    EXPECT_EQ(check_thm46(m44, {zero, std::nullopt}, 8).clause, "i");
}

TEST(PrimeOrbits, PowersOfEachPrime) {
    std::vector<long> idx;
    for (long k = 1; k <= 30; ++k) idx.push_back(k);
    auto orb = prime_orbits(idx);
    ASSERT_EQ(orb.size(), 3u);
    EXPECT_EQ(orb[0], (std::vector<long>{2, 4, 8, 16}));
    EXPECT_EQ(orb[1], (std::vector<long>{3, 9, 27}));
    EXPECT_EQ(orb[2], (std::vector<long>{5, 25}));
    EXPECT_TRUE(prime_orbits({}).empty());
}

TEST(Signs, StarAndTernary) {
    EXPECT_EQ(star_sign(1, 1), 1);
    EXPECT_EQ(star_sign(2, 1), -1);
    EXPECT_EQ(star_sign(3, 2), -1);
    EXPECT_EQ(star_sign(3, 3), 1);
    EXPECT_EQ(ternary_sign(1, 1), 0);
    EXPECT_EQ(ternary_sign(2, 1), 1);
    EXPECT_EQ(ternary_sign(3, 1), -1);
    EXPECT_EQ(ternary_sign(4, 2), 1);
    EXPECT_EQ(ternary_sign(7, 2), -1);
}

// --- builders ---

TEST(Builders, Thm37Values) {
    auto sp = truncate(catalog("example35"), 10);
    auto fam = build_thm37(sp, consecutive(1, 4));
    EXPECT_EQ(fam.members[0](1), Q(3, 2));
    EXPECT_EQ(fam.members[0](2), Q(-1));
    EXPECT_EQ(lip_norm(fam.members[0]), Q(1));
}

TEST(Builders, Thm34Values) {
    auto sp = line_space({Q(0), Q(10), Q(13)});
    auto fam = build_thm34(sp, {{1, 2}});
    EXPECT_EQ(fam.members[0].values, (QVec{0, Q(3, 2), Q(-3, 2)}));
    EXPECT_THROW(build_thm34(sp, {{0, 1}}), DomainError);
}

TEST(Builders, Thm43OrbitShape) {
    auto dm = catalog("dmqr41");
    auto fam = build_thm43(dm, 10);
    ASSERT_EQ(fam.members.size(), 2u);  // orbits of 2 and 3 among 1..10
    EXPECT_TRUE(fam.limit_family);
    EXPECT_EQ(fam.members[0](dm.row_of(2)), Q(1, 2));
    EXPECT_EQ(fam.members[0](dm.row_of(4)), Q(-1, 2));
    EXPECT_EQ(fam.members[0](dm.row_of(8)), Q(-1, 2));
    EXPECT_EQ(fam.members[1](dm.row_of(9)), Q(-1, 2));
}

TEST(Builders, Thm57Levels) {
    auto fam = build_thm57(Q(2), 3, 2);
    EXPECT_EQ(fam.space->size(), 28u);
    EXPECT_EQ(fam.target, Target::Sum);
    // j = 2 has sign +1 on coordinate 1; levels 1/2, 3/4, 7/8
    EXPECT_EQ(fam.members[0](4), Q(1, 2));
    EXPECT_EQ(fam.members[0](6), Q(7, 8));
    EXPECT_EQ(fam.members[0](7), Q(-1, 2));
    EXPECT_EQ(fam.members[1](4), Q(0));
}

// --- verification ---

TEST(Verify, Prop23IsExactWithWitnessAtBase) {
    auto fam = build_prop23(truncate(catalog("prop23"), 8));
    auto rep = verify_isometry(fam, standard_battery(7, 4, 100, kDefaultSeed));
    EXPECT_TRUE(rep.exact_pass);
    EXPECT_EQ(rep.failures, 0u);
    for (const auto& s : rep.samples) EXPECT_EQ(s.point, 0u);
    for (const auto& d : rep.defects) EXPECT_EQ(d, Q(0));
}

TEST(Verify, FiniteFamiliesAreExact) {
    auto disc = truncate(catalog("discrete"), 9);
    EXPECT_TRUE(verify_isometry(build_thm34(disc, consecutive(1, 4)), small_battery(4)).exact_pass);
    EXPECT_TRUE(verify_isometry(build_thm37(truncate(catalog("example35"), 10), consecutive(1, 4)), small_battery(4)).exact_pass);
    EXPECT_TRUE(verify_isometry(build_prop42(integer_space(10), {2, 4, 6, 8}), small_battery(4)).exact_pass);
    EXPECT_TRUE(verify_isometry(build_thm51_star(3), small_battery(3)).exact_pass);
    EXPECT_TRUE(verify_isometry(build_prop53_catalog(3), small_battery(3)).exact_pass);
}

TEST(Verify, NormsAgreeWithBruteForce) {
    auto fam = build_thm51_star(2);
    auto b = small_battery(2);
    for (const auto& a : b.vectors) {
        auto f = combine(fam.members, a);
        EXPECT_EQ(lip_norm(f), oracle::lip_norm(fam.space->dist, f.values));
        EXPECT_EQ(lip_norm(f), l1(a));
    }
}

TEST(Verify, RejectsLongVectors) {
    auto fam = build_prop42(integer_space(10), {2, 4});
    Battery b;
    b.vectors = {{1, 1, 1}};
    EXPECT_THROW(verify_isometry(fam, b), StructuralError);
}

// Worst defects of the limit families on a fixed battery shrink (or stay) as the truncation grows.
TEST(LimitFamilies, WorstDefects) {
    auto b3 = standard_battery(3, 3, 100, kDefaultSeed);
    auto dm = catalog("dmqr41");
    auto r32 = verify_isometry(build_thm43(dm, 32), b3), r64 = verify_isometry(build_thm43(dm, 64), b3);
    EXPECT_EQ(r32.worst_defect, Q(3, 26));
    EXPECT_EQ(r64.worst_defect, Q(3, 26));
    EXPECT_TRUE(r64.norm_bounded && r64.residue_pass);

    auto e44 = catalog("example44");
    EXPECT_EQ(verify_isometry(build_thm45(e44, 2, 32), b3).worst_defect, Q(1, 3));
    EXPECT_EQ(verify_isometry(build_thm45(e44, 2, 64), b3).worst_defect, Q(2, 9));

    auto m44 = catalog("dmqr44");
    EpsSpec eps{m44.eps, std::nullopt};
    EXPECT_EQ(verify_isometry(build_thm46(m44, eps, 32), b3).worst_defect, Q(49152, 764587));
    EXPECT_EQ(verify_isometry(build_thm46(m44, eps, 64), b3).worst_defect, Q(97517568, 1979711489));

    EXPECT_EQ(verify_isometry(build_thm57(Q(2), 2, 3), b3).worst_defect, Q(9, 4));
    EXPECT_EQ(verify_isometry(build_thm57(Q(2), 3, 3), b3).worst_defect, Q(9, 8));
    auto r57 = verify_isometry(build_thm57(Q(2), 3, 4), small_battery(4));
    EXPECT_EQ(r57.worst_defect, Q(19, 14));
    EXPECT_TRUE(r57.residue_pass);
    EXPECT_FALSE(r57.exact_pass);
}

// --- sign rigidity ---

TEST(SignRigidity, StarFamily) {
    auto fam = build_thm51_star(3);
    QVec a{1, -1, 1};
    EXPECT_TRUE(ell1_sign_check(fam.members, a, {4, 5}));
    EXPECT_THROW(ell1_sign_check(fam.members, a, {5, 4}), PreconditionError);
    EXPECT_FALSE(sign_pattern_matches(fam.members, a, {5, 4}));
    EXPECT_THROW(sign_pattern_matches(fam.members, {1, 1, 1, 1}, {4, 5}), DomainError);
}
