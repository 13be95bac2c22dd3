#pragma once

#include "lipwb/rational.hpp"

namespace lipwb {

struct LpSolution {
    QVec x;
    QVec objective_values;  // one per objective, at the returned point
    std::size_t pivots = 0;
};

// Dense exact simplex with Bland's rule.
// Maximizes objectives[0].x subject to A x <= b, x >= 0 (b >= 0, so the
// origin is feasible), then objectives[1].x over that optimal face, and so on.
// Throws DomainError when an objective is unbounded.
LpSolution lex_maximize(const QMat& A, const QVec& b, const std::vector<QVec>& objectives);

}  // namespace lipwb
