#pragma once

#include "lipwb/rational.hpp"

#include <cstdint>

namespace lipwb {

struct Battery {
    std::vector<QVec> vectors;
    std::size_t sign_count = 0;  // leading entries that are sign-or-zero vectors
    std::uint64_t seed = 0;
};

// All 3^k vectors with entries in {-1, 0, 1}, in base-3 counting order
// (digit 0 -> 0, 1 -> +1, 2 -> -1, first coordinate least significant).
std::vector<QVec> sign_vectors(std::size_t k);

// Sign-or-zero vectors on the first min(support, length) coordinates, then
// `random_count` vectors of the given length with entries in [-3, 3] and
// denominators up to 16.
Battery standard_battery(std::size_t length, std::size_t support, std::size_t random_count, std::uint64_t seed);

constexpr std::uint64_t kDefaultSeed = 20240611;

}  // namespace lipwb
