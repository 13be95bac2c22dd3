#include "lipwb/simplex.hpp"

#include "lipwb/errors.hpp"

namespace lipwb {

LpSolution lex_maximize(const QMat& A, const QVec& b, const std::vector<QVec>& objectives) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : (objectives.empty() ? 0 : objectives[0].size());
    if (b.size() != m) throw StructuralError("lp: rhs length mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw StructuralError("lp: ragged constraint matrix");
    for (const auto& v : b)
        if (v < 0) throw DomainError("lp: negative rhs, origin infeasible");
    for (const auto& c : objectives)
        if (c.size() != n) throw StructuralError("lp: objective length mismatch");

    const std::size_t cols = n + m;
    QMat T(m, QVec(cols + 1, Q(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][cols] = b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    std::vector<bool> active(cols, true);

    LpSolution sol;
    QVec r(cols + 1);
    for (const auto& c : objectives) {
        // reduced costs r_j = c_j - sum_i c_B(i) T[i][j]
        auto cost = [&](std::size_t j) { return j < n ? c[j] : Q(0); };
        for (std::size_t j = 0; j <= cols; ++j) {
            Q v = j < cols ? cost(j) : Q(0);
            for (std::size_t i = 0; i < m; ++i) {
                Q cb = cost(basis[i]);
                if (cb != 0 && T[i][j] != 0) v -= cb * T[i][j];
            }
            r[j] = v;
        }
        for (;;) {
            std::size_t e = cols;
            for (std::size_t j = 0; j < cols; ++j)
                if (active[j] && r[j] > 0) {
                    e = j;
                    break;
                }
            if (e == cols) break;
            std::size_t leave = m;
            Q best_ratio;
            for (std::size_t i = 0; i < m; ++i) {
                if (T[i][e] <= 0) continue;
                Q ratio = T[i][cols] / T[i][e];
                if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m) throw DomainError("lp: objective unbounded");
            Q piv = T[leave][e];
            for (auto& v : T[leave]) v /= piv;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == leave || T[i][e] == 0) continue;
                Q f = T[i][e];
                for (std::size_t j = 0; j <= cols; ++j)
                    if (T[leave][j] != 0) T[i][j] -= f * T[leave][j];
            }
            if (r[e] != 0) {
                Q f = r[e];
                for (std::size_t j = 0; j <= cols; ++j)
                    if (T[leave][j] != 0) r[j] -= f * T[leave][j];
            }
            basis[leave] = e;
            ++sol.pivots;
        }
        // Pin the optimal face: nonbasic columns with nonzero reduced cost stay at 0.
        for (std::size_t j = 0; j < cols; ++j)
            if (r[j] != 0) active[j] = false;
    }

    sol.x.assign(n, Q(0));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < n) sol.x[basis[i]] = T[i][cols];
    for (const auto& c : objectives) {
        Q v = 0;
        for (std::size_t j = 0; j < n; ++j) v += c[j] * sol.x[j];
        sol.objective_values.push_back(v);
    }
    return sol;
}

}  // namespace lipwb
