#include "lipwb/battery.hpp"

namespace lipwb {

std::vector<QVec> sign_vectors(std::size_t k) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    std::vector<QVec> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        QVec v(k, Q(0));
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i, c /= 3) {
            if (c % 3 == 1) v[i] = 1;
            else if (c % 3 == 2) v[i] = -1;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Battery standard_battery(std::size_t length, std::size_t support, std::size_t random_count, std::uint64_t seed) {
    Battery b;
    b.seed = seed;
    b.vectors = sign_vectors(std::min(support, length));
    b.sign_count = b.vectors.size();
    std::mt19937_64 rng(seed);
    for (std::size_t r = 0; r < random_count; ++r) {
        QVec v(length);
        for (auto& x : v) x = random_rational(rng, -3, 3, 16);
        b.vectors.push_back(std::move(v));
    }
    return b;
}

}  // namespace lipwb
