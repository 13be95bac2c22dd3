#pragma once

#include "lipwb/battery.hpp"
#include "lipwb/lipfun.hpp"

#include <functional>
#include <optional>

namespace lipwb {

struct CheckResult {
    bool passed = true;
    std::string clause;                // failing clause when !passed
    std::vector<std::size_t> witness;  // rows (space checks) or model indices (model checks)
    QVec values;
    explicit operator bool() const { return passed; }
};

// --- hypothesis checkers on finite spaces (rows) ---

// d(p_g, q_g) = R(p_g) and d(p_a, p_b) >= d(p_a, q_a) + d(p_b, q_b)
CheckResult check_prop31(const FiniteMetricSpace& sp, const std::vector<std::size_t>& points,
                         const std::vector<std::size_t>& partners);
// R(p), R(q) >= d(p,q)/2 and d_a + d_b <= 2 min cross distance
CheckResult check_thm34(const FiniteMetricSpace& sp, const std::vector<IndexPair>& pairs);
// clauses (1)-(4) with the R-shifted values
CheckResult check_thm37(const FiniteMetricSpace& sp, const std::vector<IndexPair>& pairs);
// d(p_n, p_m) >= R(p_n) + R(p_m)
CheckResult check_prop42(const FiniteMetricSpace& sp, const std::vector<std::size_t>& points);

// --- checkers on models (model indices, declared limits) ---

CheckResult check_thm43(const MetricModel& model, std::size_t N);
// sequence p_first, p_first+1, ...; D is the declared origin limit
CheckResult check_thm45(const MetricModel& model, long first, std::size_t N);

struct EpsSpec {
    std::function<Q(long)> eps;
    // lim_m (d(p_m,0) - eps_m); required for bounded models
    std::optional<Q> tail_gap;
};
CheckResult check_thm46(const MetricModel& model, const EpsSpec& eps, std::size_t N);

// --- families ---

// Designated attainment data for one coefficient vector. `residue` is the
// closed-form value of target - pointwise_sup(f_a, point); when
// residue_is_bound it only bounds that defect from above (the limit families
// carry a residue along the orbit of the designated point).
struct Witness {
    std::size_t point = 0;
    std::optional<std::size_t> partner;
    Q residue;
    bool residue_is_bound = false;
};

enum class Target { Sup, Sum };
std::string to_string(Target t);

struct Family {
    std::string theorem;
    SpacePtr space;
    std::vector<LipschitzFunction> members;
    std::vector<IndexPair> anchors;  // (p_g, q_g) rows where the theorem has pairs
    Target target = Target::Sup;
    bool limit_family = false;  // isometric only along increasing truncations
    std::function<std::optional<Witness>(const QVec&)> witness;
};

// Prime-power orbits {r_n^m} inside `indices`, one per prime while the orbit
// has at least two members.
std::vector<std::vector<long>> prime_orbits(const std::vector<long>& indices);

// f_n = indicator of row n, n = 1..N-1
Family build_prop23(SpacePtr sp);
// f_g(p_g) = R(p_g)
Family build_prop31(SpacePtr sp, const std::vector<std::size_t>& points, const std::vector<std::size_t>& partners);
// f_g(p_g) = d/2, f_g(q_g) = -d/2
Family build_thm34(SpacePtr sp, const std::vector<IndexPair>& pairs);
// f_g(p_g) = (d + R(p) - R(q))/2, f_g(q_g) = (-d + R(p) - R(q))/2
Family build_thm37(SpacePtr sp, const std::vector<IndexPair>& pairs);
// f_n(p_n) = R(p_n); pointwise at p_n
Family build_prop42(SpacePtr sp, const std::vector<std::size_t>& points);
Family build_thm43(const MetricModel& model, std::size_t N);
Family build_thm45(const MetricModel& model, long first, std::size_t N);
Family build_thm46(const MetricModel& model, const EpsSpec& eps, std::size_t N, std::string theorem = "thm46");
// Sign sequence of member g (1-based) at coordinate n (1-based): bit n-1 of
// g-1 set -> -1, else +1.
int star_sign(std::size_t gamma, std::size_t n);
// pairs[g-1] = (p_g, q_g) for g = 1..2^levels; e_n = sum_g s_n^(g) f_g with the tents
// f_g(x) = max{0, d(p_g,q_g) - d(p_g,x)}
Family build_thm51(SpacePtr sp, const std::vector<IndexPair>& pairs, std::size_t levels);
Family build_thm51_star(std::size_t levels);
// f_g = +-1/2 on (p_g, q_g)
Family build_prop53(SpacePtr sp, const std::vector<IndexPair>& pairs, std::size_t levels);
Family build_prop53_catalog(std::size_t levels);
// Sign vector j (1-based) from the base-3 digits of j-1: 0 -> 0, 1 -> +1, 2 -> -1.
int ternary_sign(std::size_t j, std::size_t n);
// catalog thm57 truncated to 1 + 3^support * K points
Family build_thm57(const Q& c, std::size_t K, std::size_t support);

// --- verification ---

struct WitnessSample {
    QVec coeffs;
    Q norm, target;
    std::size_t point = 0;
    std::optional<std::size_t> partner;
    Q defect, residue;
    bool ok = true;
};

struct VerificationReport {
    std::string theorem, space;
    Target target = Target::Sup;
    std::size_t coeff_count = 0;
    std::uint64_t seed = 0;
    bool exact_pass = true;    // every norm equals the target and every witness holds
    bool norm_bounded = true;  // every norm is at most the target
    bool residue_pass = true;  // designated defects match (or respect) the closed form
    Q worst_defect = 0;        // max of target - norm
    QVec defects;              // designated-point defect per vector, battery order
    std::size_t failures = 0;
    std::vector<WitnessSample> samples;  // first few vectors and every failure, capped
};

VerificationReport verify_isometry(const Family& fam, const Battery& battery, std::size_t sample_cap = 8);

// Lemma on sign rigidity: S(g_n, p, q) = sign(a_n) on the support.
// ell1_sign_check requires S(f_a, p, q) = |f_a| (else PreconditionError).
bool ell1_sign_check(const std::vector<LipschitzFunction>& family, const QVec& coeffs, IndexPair pair);
bool sign_pattern_matches(const std::vector<LipschitzFunction>& family, const QVec& coeffs, IndexPair pair);

}  // namespace lipwb
