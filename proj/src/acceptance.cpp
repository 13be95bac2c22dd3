#include "lipwb/acceptance.hpp"

#include "lipwb/analytic.hpp"
#include "lipwb/errors.hpp"
#include "lipwb/freespace.hpp"
#include "lipwb/pipeline.hpp"
#include "lipwb/plfun.hpp"
#include "lipwb/rtree.hpp"

#include <cstdio>
#include <sstream>

namespace lipwb {

namespace {

constexpr std::size_t kRandomCount = 100;

struct Acc {
    CriterionResult& r;
    void check(bool ok, const std::string& what) {
        r.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) r.passed = false;
    }
    void note(const std::string& s) { r.supplementary.push_back(s); }
};

Battery battery_for(std::size_t members, std::size_t support = 5) {
    return standard_battery(members, std::min(members, support), kRandomCount, kDefaultSeed);
}

std::string summary(const VerificationReport& rep) {
    std::ostringstream os;
    os << rep.theorem << " on " << rep.space << ": " << rep.coeff_count << " vectors, exact=" << (rep.exact_pass ? "yes" : "no")
       << ", norm<=target=" << (rep.norm_bounded ? "yes" : "no") << ", residues=" << (rep.residue_pass ? "ok" : "mismatch")
       << ", worst defect " << to_string(rep.worst_defect);
    return os.str();
}

// Reading of a limit family along two truncations with one battery.
std::string limit_reading(const Family& small, const Family& large, const Battery& b, const std::string& tag) {
    auto r1 = verify_isometry(small, b), r2 = verify_isometry(large, b);
    bool mono = true;
    for (std::size_t i = 0; i < r1.defects.size(); ++i)
        if (r2.defects[i] > r1.defects[i]) mono = false;
    bool ok = r1.norm_bounded && r2.norm_bounded && r1.residue_pass && r2.residue_pass && mono;
    std::ostringstream os;
    os << "limit reading " << small.theorem << " " << tag << ": norm<=target and residues hold, defects non-increasing -> "
       << (ok ? "yes" : "no") << " (worst defect " << to_string(r1.worst_defect) << " -> " << to_string(r2.worst_defect)
       << ")";
    return os.str();
}

std::vector<IndexPair> consecutive_pairs(std::size_t first_row, std::size_t count) {
    std::vector<IndexPair> out;
    for (std::size_t g = 0; g < count; ++g) out.emplace_back(first_row + 2 * g, first_row + 2 * g + 1);
    return out;
}

void criterion1(Acc& a) {
    for (const auto& name : catalog_names()) {
        bool ok = true;
        std::string msg;
        try {
            auto sp = truncate(catalog(name), 64);
            ok = validate(*sp).passed;
        } catch (const ModelDefinitionError& e) {
            ok = false;
            msg = std::string(": ") + e.what();
        }
        a.check(ok, name + " validates at N=64" + msg);
    }
}

void criterion2(Acc& a) {
    for (std::size_t N : {8u, 16u, 32u}) {
        auto fam = build_prop23(truncate(catalog("prop23"), N));
        auto rep = verify_isometry(fam, standard_battery(N - 1, 4, kRandomCount, kDefaultSeed));
        bool at0 = true;
        for (const auto& d : rep.defects) at0 = at0 && d == 0;
        a.check(rep.exact_pass && at0, "N=" + std::to_string(N) + ": " + summary(rep) + ", defect at 0 is 0 for all");
    }
}

void criterion3(Acc& a) {
    auto b = standard_battery(6, 4, kRandomCount, kDefaultSeed);
    bool ok = true;
    for (const auto& v : b.vectors) ok = ok && pl_norm(tent_sum(v)) == linf(v);
    a.check(ok, "tent sums: norm equals max|a_n| on " + std::to_string(b.vectors.size()) + " vectors");

    auto g = gen_zigzag(Q(1, 4), Q(1, 2), 10);
    Q norm = pl_norm(g);
    a.check(norm == 1 - pow2_neg(10), "zigzag K=10: norm " + to_string(norm) + " = 1 - 2^-10");
    Q at0 = pl_pointwise_sup(g, 0);
    a.check(at0 <= Q(1, 4), "zigzag: pointwise sup at 0 is " + to_string(at0) + " <= 1/4");
    std::size_t total = 0, attaining = 0;
    std::optional<Q> first;
    for (const auto& x : g.xs) {
        if (x <= 0) continue;
        ++total;
        if (pl_pointwise_sup(g, x) >= norm) {
            ++attaining;
            if (!first) first = x;
        }
    }
    a.check(attaining == 0, "zigzag: pointwise sup below the norm at every breakpoint x > 0 (" +
                                std::to_string(attaining) + " of " + std::to_string(total) + " attain" +
                                (first ? ", first at x=" + to_string(*first) : std::string()) + ")");
    if (attaining) a.note("a breakpoint bounding a maximal-slope segment attains the norm along that segment, so this sub-check cannot hold for any truncation level");
}

void criterion4(Acc& a) {
    auto disc = truncate(catalog("discrete"), 9);
    a.check(bool(check_thm34(*disc, consecutive_pairs(1, 4))), "thm34 checker passes on the discrete metric, 4 disjoint pairs");
    auto e35 = truncate(catalog("example35"), 10);
    a.check(bool(check_thm37(*e35, consecutive_pairs(1, 4))), "thm37 checker passes on example35 N=10");
    auto e48 = truncate(catalog("example48"), 10);
    auto r48 = check_thm37(*e48, consecutive_pairs(0, 5));
    a.check(!r48, "thm37 checker fails on example48 N=10 (clause " + r48.clause + ")");
    a.check(!check_prop42(*disc, {1, 2, 3, 4, 5, 6, 7, 8}), "prop42 checker fails on the discrete metric");
    a.check(bool(check_thm43(catalog("dmqr41"), 20)), "thm43 checker passes on dmqr41 N=20");
    a.check(bool(check_thm45(catalog("example44"), 2, 20)), "thm45 checker passes on example44 (n >= 2) N=20");
    auto m44 = catalog("dmqr44");
    a.check(bool(check_thm46(m44, EpsSpec{m44.eps, std::nullopt}, 20)), "thm46 checker passes on dmqr44 N=20");
}

void criterion5(Acc& a) {
    auto run = [&](const Family& fam, std::size_t support) {
        auto rep = verify_isometry(fam, battery_for(fam.members.size(), support));
        a.check(rep.exact_pass, summary(rep));
        return rep;
    };
    auto disc = truncate(catalog("discrete"), 9);
    run(build_thm34(disc, consecutive_pairs(1, 4)), 5);
    run(build_thm37(truncate(catalog("example35"), 10), consecutive_pairs(1, 4)), 5);
    run(build_prop42(integer_space(10), {2, 4, 6, 8}), 5);

    auto dm = catalog("dmqr41");
    run(build_thm43(dm, 64), 5);
    a.note(limit_reading(build_thm43(dm, 32), build_thm43(dm, 64), battery_for(3), "dmqr41 N=32->64"));
    auto e44 = catalog("example44");
    run(build_thm45(e44, 2, 64), 5);
    a.note(limit_reading(build_thm45(e44, 2, 32), build_thm45(e44, 2, 64), battery_for(3), "example44 N=32->64"));
    auto m44 = catalog("dmqr44");
    EpsSpec eps{m44.eps, std::nullopt};
    run(build_thm46(m44, eps, 64), 5);
    a.note(limit_reading(build_thm46(m44, eps, 32), build_thm46(m44, eps, 64), battery_for(3), "dmqr44 N=32->64"));

    run(build_thm51_star(3), 5);
    run(build_prop53_catalog(3), 5);
    auto r57 = run(build_thm57(Q(2), 3, 4), 5);
    a.check(r57.residue_pass, "thm57: defect at 0 equals |a|_1 * 2^-3 for every vector");
    a.note(limit_reading(build_thm57(Q(2), 2, 3), build_thm57(Q(2), 3, 3), battery_for(3), "c=2 K=2->3"));
    a.note("families of the bounded-tail theorems and the layered sum family approach their norms only as N or K grows; on a truncation the norm is strictly below the target for some vectors");
}

void criterion6(Acc& a) {
    struct Case {
        MetricModel model;
        MainCase want;
    };
    std::vector<Case> cases{{catalog("example48"), MainCase::BoundedB}, {catalog("dmqr41"), MainCase::BoundedA},
                            {pow4_model(), MainCase::Unbounded}};
    for (const auto& c : cases) {
        auto res = main_theorem_pipeline(c.model, 30);
        a.check(res.which == c.want, c.model.name + " classified " + to_string(res.which));
        std::string inv = res.invariants_hold() ? "all hold" : res.invariant_failures.front();
        a.check(res.invariants_hold(), c.model.name + " construction invariants: " + inv);
        if (c.want == MainCase::BoundedB)
            a.check(!res.pair_eps.empty() && res.pair_eps[0] == Q(1, 54) &&
                        res.family.members[0](res.family.anchors[0].first) == Q(11, 18),
                    "example48: eps_1 = 1/54 and f_1(p_sigma_1) = 11/18");
        a.check(res.report.exact_pass, c.model.name + " N=30: " + summary(res.report));
        if (res.family.limit_family) {
            auto big = main_theorem_pipeline(c.model, 60, battery_for(res.family.members.size()));
            a.note(limit_reading(res.family, big.family, battery_for(res.family.members.size()),
                                 c.model.name + " N=30->60"));
        }
    }
}

void criterion7(Acc& a) {
    std::mt19937_64 rng(kDefaultSeed);
    std::size_t agree = 0, duals = 0, total = 0;
    auto one = [&](SpacePtr sp) {
        std::map<std::size_t, Q> w;
        std::size_t k = 1 + rng() % sp->size();
        for (std::size_t i = 0; i < k; ++i) w[rng() % sp->size()] += random_rational(rng, -3, 3, 8);
        FreeElement mu(sp, w);
        auto lp = free_norm_lp(mu);
        Q fl = free_norm_flow(mu);
        ++total;
        if (lp.norm == fl) ++agree;
        if (lip_norm(lp.witness) <= 1 && pairing(mu, lp.witness) == lp.norm) ++duals;
    };
    for (int i = 0; i < 200; ++i) one(random_metric(rng, 2 + rng() % 7));
    for (const auto& name : catalog_names())
        for (int i = 0; i < 5; ++i) one(truncate(catalog(name), 10));
    a.check(agree == total, "LP and flow agree on " + std::to_string(agree) + "/" + std::to_string(total) + " elements");
    a.check(duals == total, "dual witnesses have norm <= 1 and attain: " + std::to_string(duals) + "/" + std::to_string(total));
}

void criterion8(Acc& a) {
    auto sp = truncate(catalog("dmqr41"), 6);
    auto mc = matching_min_check(*sp, {{0, 1}, {2, 3}});
    a.check(!mc.identity_optimal && mc.witness == std::vector<std::size_t>{1, 0},
            "matching check fails with the swap witness (cost " + to_string(mc.best_cost) + " < " +
                to_string(mc.identity_cost) + ")");
    Q nm = free_norm_lp(molecule_sum(sp, {{{0, 1}, {2, 3}}, {}})).norm;
    a.check(nm < 2, "free norm of m12 + m34 is " + to_string(nm) + " < 2");
}

void criterion9(Acc& a) {
    auto sp = truncate(catalog("discrete"), 9);
    auto pairs = consecutive_pairs(1, 4);
    bool all4 = true;
    for (const auto& s : sign_vectors(4)) {
        MoleculeFamily fam{pairs, {}};
        bool full = true;
        for (const auto& v : s) {
            if (v == 0) full = false;
            fam.signs.push_back(v < 0 ? -1 : 1);
        }
        if (!full) continue;
        all4 = all4 && free_norm_lp(molecule_sum(sp, fam)).norm == 4;
    }
    a.check(all4, "free norm of every signed sum of the 4 molecules is 4");
    auto fam = build_thm34(sp, pairs);
    std::mt19937_64 rng(kDefaultSeed + 9);
    std::vector<FreeElement> samples;
    for (int i = 0; i < 50; ++i) {
        std::map<std::size_t, Q> w;
        for (std::size_t k = 1; k < sp->size(); ++k)
            if (rng() % 2) w[k] = random_rational(rng, -3, 3, 8);
        samples.emplace_back(sp, w);
    }
    auto rep = complementation_test({pairs, {}}, fam.members, samples);
    a.check(rep.passed, "complementation inequalities on " + std::to_string(rep.samples) + " samples (" +
                            std::to_string(rep.failures.size()) + " failures)");
}

void criterion10(Acc& a) {
    std::mt19937_64 rng(kDefaultSeed + 10);
    std::size_t ok = 0;
    for (int i = 0; i < 1000; ++i) {
        auto t = random_tree(rng, 1 + rng() % 12);
        if (four_point_check(*tree_metric(t)).passed) ++ok;
    }
    a.check(ok == 1000, "four-point condition on random trees: " + std::to_string(ok) + "/1000");
    auto fc = four_point_check(*four_cycle_space());
    std::ostringstream w;
    w << "(" << fc.witness[0] << "," << fc.witness[1] << "," << fc.witness[2] << "," << fc.witness[3] << ")";
    a.check(!fc.passed, "4-cycle fails with witness " + w.str());
    std::vector<std::pair<std::string, WeightedTree>> trees{
        {"star(6)", star_tree(6)}, {"path(9)", path_tree(9)}, {"caterpillar(5,1)", caterpillar_tree(5, 1)}};
    for (const auto& [name, t] : trees) {
        auto res = tree_c0_pipeline(t);
        a.check(res.report.exact_pass, name + " case " + std::to_string(res.which) + ": " + summary(res.report));
    }
}

void criterion11(Acc& a) {
    auto r = sample_analytic("x2-over-absx-plus-2", kAnalyticResolution, kAnalyticHorizon);
    char buf[160];
    std::snprintf(buf, sizeof buf, "S(f,0,1e6) = %.9f, |1 - S| = %.3e <= %.0e (floating point)", r.slope_at_horizon,
                  1 - r.slope_at_horizon, kAnalyticHorizonTol);
    a.check(std::abs(1 - r.slope_at_horizon) <= kAnalyticHorizonTol, buf);
    std::snprintf(buf, sizeof buf, "grid max slope %.15f <= 1 + %.0e (floating point)", r.max_grid_slope, kAnalyticSlopeTol);
    a.check(r.max_grid_slope <= 1 + kAnalyticSlopeTol, buf);
}

const char* kTitles[] = {"",
                         "metric catalog soundness",
                         "indicator family isometry",
                         "tent sums and the zigzag cone",
                         "theorem checkers on the stated instances",
                         "embedding families on their catalog spaces",
                         "main theorem pipeline",
                         "free-norm oracles agree",
                         "negative l1 shadow",
                         "complemented l1 shadow",
                         "tree metrics",
                         "analytic sample"};

}  // namespace

CriterionResult run_criterion(int id) {
    CriterionResult r;
    r.id = id;
    if (id < 1 || id > 11) throw DomainError("criterion id must be 1..11");
    r.title = kTitles[id];
    Acc a{r};
    try {
        switch (id) {
            case 1: criterion1(a); break;
            case 2: criterion2(a); break;
            case 3: criterion3(a); break;
            case 4: criterion4(a); break;
            case 5: criterion5(a); break;
            case 6: criterion6(a); break;
            case 7: criterion7(a); break;
            case 8: criterion8(a); break;
            case 9: criterion9(a); break;
            case 10: criterion10(a); break;
            case 11: criterion11(a); break;
        }
    } catch (const std::exception& e) {
        a.check(false, std::string("exception: ") + e.what());
    }
    return r;
}

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 11; ++id) out.push_back(run_criterion(id));
    return out;
}

}  // namespace lipwb
