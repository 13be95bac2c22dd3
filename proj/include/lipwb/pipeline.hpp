#pragma once

#include "lipwb/embeddings.hpp"

namespace lipwb {

enum class MainCase { BoundedA, BoundedB, Unbounded };
// "I-(i)", "I-(ii)", "II"
std::string to_string(MainCase c);

// phi >= psi + psi on some sequence pairs and < on others.
struct DichotomyError : std::runtime_error {
    DichotomyError(const std::string& msg, long n, long m, QVec vals)
        : std::runtime_error(msg), n(n), m(m), values(std::move(vals)) {}
    long n, m;
    QVec values;  // phi(n,m), psi(n) + psi(m)
};

struct PipelineResult {
    MainCase which = MainCase::BoundedA;
    std::vector<long> subspace_indices;  // model indices of M0, base first
    Family family;
    // I-(i): (n, eps_n)
    std::vector<std::pair<long, Q>> eps;
    // I-(ii): sigma_n, tau_n and eps_n per pair
    std::vector<long> sigma, tau;
    QVec pair_eps;
    // II: c_n per selected point, in selection order
    QVec c;
    std::vector<std::string> invariant_failures;
    VerificationReport report;
    bool invariants_hold() const { return invariant_failures.empty(); }
};

// Classifies the model, builds M0 and its c0 family on the first N points,
// checks the construction's invariants and verifies the family on `battery`
// (default: sign vectors on up to 5 coordinates plus 100 random vectors).
PipelineResult main_theorem_pipeline(const MetricModel& model, std::size_t N,
                                     const std::optional<Battery>& battery = std::nullopt);

}  // namespace lipwb
