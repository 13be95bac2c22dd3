#include "lipwb/assignment.hpp"

#include "lipwb/errors.hpp"

#include <numeric>
#include <optional>

namespace lipwb {

namespace {

void check_square(const QMat& cost) {
    for (const auto& row : cost)
        if (row.size() != cost.size()) throw StructuralError("assignment: cost matrix must be square");
}

struct Search {
    const QMat& c;
    std::size_t n;
    std::vector<Q> row_min_suffix;  // lower bound for rows i.. onward
    std::vector<std::size_t> cur, best;
    std::vector<bool> used;
    std::optional<Q> best_cost;

    void dfs(std::size_t i, const Q& acc) {
        if (best_cost && acc + row_min_suffix[i] > *best_cost) return;
        if (i == n) {
            // columns are tried in increasing order, so the first optimum found is lex smallest
            if (!best_cost || acc < *best_cost) {
                best_cost = acc;
                best = cur;
            }
            return;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            cur[i] = j;
            dfs(i + 1, acc + c[i][j]);
            used[j] = false;
        }
    }
};

}  // namespace

Assignment min_assignment_exhaustive(const QMat& cost) {
    check_square(cost);
    const std::size_t n = cost.size();
    Search s{cost, n, std::vector<Q>(n + 1, Q(0)), std::vector<std::size_t>(n), {}, std::vector<bool>(n, false), {}};
    for (std::size_t i = n; i-- > 0;) {
        Q m = cost[i][0];
        for (const auto& v : cost[i]) m = std::min(m, v);
        s.row_min_suffix[i] = s.row_min_suffix[i + 1] + m;
    }
    s.dfs(0, Q(0));
    return {s.best, s.best_cost.value_or(Q(0))};
}

Assignment min_assignment_hungarian(const QMat& cost) {
    check_square(cost);
    const std::size_t n = cost.size();
    if (n == 0) return {{}, Q(0)};
    // 1-based potentials u (rows), v (columns); p[j] = row matched to column j
    std::vector<Q> u(n + 1, Q(0)), v(n + 1, Q(0));
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<std::optional<Q>> minv(n + 1);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            std::size_t i0 = p[j0], j1 = 0;
            std::optional<Q> delta;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Q cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (!minv[j] || cur < *minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (!delta || *minv[j] < *delta) {
                    delta = *minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += *delta;
                    v[j] -= *delta;
                } else {
                    *minv[j] -= *delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    Assignment a;
    a.perm.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) a.perm[p[j] - 1] = j - 1;
    a.cost = 0;
    for (std::size_t i = 0; i < n; ++i) a.cost += cost[i][a.perm[i]];
    return a;
}

}  // namespace lipwb
