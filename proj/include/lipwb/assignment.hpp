#pragma once

#include "lipwb/rational.hpp"

#include <vector>

namespace lipwb {

// perm[i] = column assigned to row i; cost is square.
struct Assignment {
    std::vector<std::size_t> perm;
    Q cost;
};

// Exhaustive branch and bound; among optimal permutations returns the
// lexicographically smallest. Intended for n <= 10.
Assignment min_assignment_exhaustive(const QMat& cost);
// Exact O(n^3) potentials method.
Assignment min_assignment_hungarian(const QMat& cost);

}  // namespace lipwb
