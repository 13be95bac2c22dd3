#pragma once
// Independent brute-force references used to derive expected values in tests.

#include "lipwb/freespace.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

using lipwb::Q;
using lipwb::QVec;
using lipwb::QMat;

inline Q abs(const Q& q) { return q < 0 ? Q(-q) : q; }

// max |f(x) - f(y)| / d(x, y) over all pairs
inline Q lip_norm(const QMat& d, const QVec& f) {
    Q best = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j)
            if (i != j) best = std::max(best, Q(abs(f[i] - f[j]) / d[i][j]));
    return best;
}

inline Q pointwise_sup(const QMat& d, const QVec& f, std::size_t p) {
    Q best = 0;
    for (std::size_t j = 0; j < f.size(); ++j)
        if (j != p) best = std::max(best, Q(abs(f[j] - f[p]) / d[p][j]));
    return best;
}

// Free norm by vertex enumeration of the unit ball of Lip_0: every vertex is
// fixed by a tree of tight constraints f(x) = f(parent) +- d(x, parent)
// rooted at the base. Feasible for up to 6 points.
inline Q free_norm(const QMat& d, const QVec& w) {
    const std::size_t n = d.size();
    if (n <= 1) return 0;
    const std::size_t m = n - 1;
    std::vector<std::size_t> choice(m, 0);  // parent index and sign, packed
    const std::size_t per = 2 * n;
    Q best = 0;
    bool any = false;
    for (;;) {
        std::vector<std::size_t> parent(n, 0);
        std::vector<int> sign(n, 1);
        bool ok = true;
        for (std::size_t x = 1; x < n && ok; ++x) {
            parent[x] = choice[x - 1] / 2;
            sign[x] = choice[x - 1] % 2 ? -1 : 1;
            if (parent[x] == x) ok = false;
        }
        QVec f(n, Q(0));
        std::vector<int> state(n, 0);
        state[0] = 2;
        // resolve values along parent chains; a cycle means no tree
        for (std::size_t x = 1; x < n && ok; ++x) {
            std::vector<std::size_t> chain;
            std::size_t y = x;
            while (ok && state[y] != 2) {
                if (state[y] == 1) ok = false;
                state[y] = 1;
                chain.push_back(y);
                y = parent[y];
            }
            for (auto it = chain.rbegin(); ok && it != chain.rend(); ++it) {
                f[*it] = f[parent[*it]] + sign[*it] * d[*it][parent[*it]];
                state[*it] = 2;
            }
        }
        if (ok && lip_norm(d, f) <= 1) {
            Q val = 0;
            for (std::size_t x = 0; x < n; ++x) val += w[x] * f[x];
            if (!any || val > best) best = val;
            any = true;
        }
        std::size_t k = 0;
        while (k < m && ++choice[k] == per) choice[k++] = 0;
        if (k == m) break;
    }
    return best;
}

// Minimum of sum_i d(u_i, v_sigma(i)) over all permutations.
inline std::pair<Q, std::vector<std::size_t>> min_matching(const QMat& cost) {
    std::vector<std::size_t> perm(cost.size());
    std::iota(perm.begin(), perm.end(), 0);
    Q best = -1;
    std::vector<std::size_t> arg;
    do {
        Q c = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) c += cost[i][perm[i]];
        if (best < 0 || c < best) {
            best = c;
            arg = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, arg};
}

}  // namespace oracle
