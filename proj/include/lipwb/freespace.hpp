#pragma once

#include "lipwb/lipfun.hpp"

#include <map>
#include <optional>

namespace lipwb {

// Finite combination of point evaluations. Zero weights are dropped.
struct FreeElement {
    SpacePtr space;
    std::map<std::size_t, Q> weights;

    FreeElement() = default;
    FreeElement(SpacePtr sp, std::map<std::size_t, Q> w);

    static FreeElement delta(SpacePtr sp, std::size_t p);
    // (delta_p - delta_q) / d(p,q)
    static FreeElement molecule(SpacePtr sp, std::size_t p, std::size_t q);
    bool empty() const { return weights.empty(); }
};

FreeElement add(const FreeElement& a, const FreeElement& b);
FreeElement scale(const Q& c, const FreeElement& a);

struct FreeNormResult {
    Q norm;
    LipschitzFunction witness;  // lip_norm <= 1, pairing = norm, lexicographically smallest
    std::size_t pivots = 0;
};

FreeNormResult free_norm_lp(const FreeElement& mu);
Q free_norm_flow(const FreeElement& mu);
Q pairing(const FreeElement& mu, const LipschitzFunction& f);

struct MatchingResult {
    bool identity_optimal = true;
    std::vector<std::size_t> witness;  // strictly cheaper permutation when not optimal
    Q identity_cost;
    Q best_cost;
};

// Pairs (u_i, v_i); is i -> i a minimum-weight matching of {u_i} onto {v_i}?
MatchingResult matching_min_check(const FiniteMetricSpace& space, const std::vector<IndexPair>& pairs,
                                  std::size_t exhaustive_limit = 10);

struct MoleculeFamily {
    std::vector<IndexPair> pairs;
    std::vector<int> signs;  // optional, +-1 per pair
};

// sum_g s_g m_{p_g, q_g}
FreeElement molecule_sum(SpacePtr sp, const MoleculeFamily& fam);

struct Thm310Report {
    bool passed = true;
    std::string failed_clause;    // "", "ii", "iii", "uniformly-discrete"
    std::vector<long> witness;    // model indices
    QVec witness_values;          // phi(n,m), psi(n) + psi(m)
};

// Throws LimitsUnavailable unless the model declares psi, L and the liminf.
Thm310Report check_thm310(const MetricModel& model, std::size_t N);

struct ComplementationFailure {
    std::size_t sample;
    std::string inequality;  // "coefficients" or "projection"
    Q lhs, rhs;
};

struct ComplementationReport {
    bool passed = true;
    std::size_t samples = 0;
    std::vector<ComplementationFailure> failures;
};

// For each sample mu: sum |<mu, f_g>| <= |mu| and |P mu| <= |mu|,
// P mu = sum <mu, f_g> m_g. Duals must have norm <= 1.
ComplementationReport complementation_test(const MoleculeFamily& molecules, const std::vector<LipschitzFunction>& duals,
                                           const std::vector<FreeElement>& samples);
FreeElement project(const MoleculeFamily& molecules, const std::vector<LipschitzFunction>& duals, const FreeElement& mu);

}  // namespace lipwb
