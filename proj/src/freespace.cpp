#include "lipwb/freespace.hpp"

#include "lipwb/assignment.hpp"
#include "lipwb/errors.hpp"
#include "lipwb/simplex.hpp"

#include <limits>

namespace lipwb {

FreeElement::FreeElement(SpacePtr sp, std::map<std::size_t, Q> w) : space(std::move(sp)) {
    if (!space) throw DomainError("free element without a space");
    for (auto& [k, v] : w) {
        if (k >= space->size()) throw DomainError("free element index out of range");
        if (v != 0) weights.emplace(k, std::move(v));
    }
}

FreeElement FreeElement::delta(SpacePtr sp, std::size_t p) { return FreeElement(std::move(sp), {{p, Q(1)}}); }

FreeElement FreeElement::molecule(SpacePtr sp, std::size_t p, std::size_t q) {
    if (p == q) throw DomainError("molecule needs distinct points");
    Q d = sp->d(p, q);
    return FreeElement(std::move(sp), {{p, Q(1) / d}, {q, Q(-1) / d}});
}

FreeElement add(const FreeElement& a, const FreeElement& b) {
    if (a.space != b.space) throw DomainError("free elements live on different spaces");
    auto w = a.weights;
    for (const auto& [k, v] : b.weights) w[k] += v;
    return FreeElement(a.space, std::move(w));
}

FreeElement scale(const Q& c, const FreeElement& a) {
    auto w = a.weights;
    for (auto& [k, v] : w) v *= c;
    return FreeElement(a.space, std::move(w));
}

Q pairing(const FreeElement& mu, const LipschitzFunction& f) {
    if (mu.space != f.space) throw DomainError("pairing across different spaces");
    Q s = 0;
    for (const auto& [k, v] : mu.weights) s += v * f.values[k];
    return s;
}

// Variables u_x = f(x) + d(x,0) >= 0 for x != 0, so |f(p) - f(q)| <= d(p,q)
// and |f(x)| <= d(x,0) become A u <= b with b >= 0.
FreeNormResult free_norm_lp(const FreeElement& mu) {
    const auto& sp = *mu.space;
    const std::size_t n = sp.size();
    FreeNormResult res;
    if (n < 2) {
        res.norm = 0;
        res.witness = LipschitzFunction::zero(mu.space);
        return res;
    }
    const std::size_t k = n - 1;
    QMat A;
    QVec b;
    for (std::size_t p = 1; p < n; ++p)
        for (std::size_t q = 1; q < n; ++q) {
            if (p == q) continue;
            QVec row(k, Q(0));
            row[p - 1] = 1;
            row[q - 1] = -1;
            A.push_back(std::move(row));
            b.push_back(sp.d(p, q) + sp.d(p, 0) - sp.d(q, 0));
        }
    for (std::size_t p = 1; p < n; ++p) {
        QVec row(k, Q(0));
        row[p - 1] = 1;
        A.push_back(std::move(row));
        b.push_back(2 * sp.d(p, 0));
    }
    std::vector<QVec> objectives;
    QVec c(k, Q(0));
    for (const auto& [x, w] : mu.weights)
        if (x != 0) c[x - 1] = w;
    objectives.push_back(c);
    // ties: smallest f(1), then f(2), ...
    for (std::size_t x = 0; x < k; ++x) {
        QVec e(k, Q(0));
        e[x] = -1;
        objectives.push_back(std::move(e));
    }
    auto sol = lex_maximize(A, b, objectives);
    QVec f(n, Q(0));
    for (std::size_t x = 1; x < n; ++x) f[x] = sol.x[x - 1] - sp.d(x, 0);
    res.witness = LipschitzFunction(mu.space, std::move(f));
    res.norm = pairing(mu, res.witness);
    res.pivots = sol.pivots;
    return res;
}

// Successive shortest paths on the bipartite transport network
// source -> supply points -> demand points -> sink.
Q free_norm_flow(const FreeElement& mu) {
    const auto& sp = *mu.space;
    std::map<std::size_t, Q> w = mu.weights;
    Q total = 0;
    for (const auto& [x, v] : w)
        if (x != 0) total += v;
    w[0] = -total;  // base mass balances the rest; delta_0 is the zero element
    std::vector<std::size_t> sup, dem;
    QVec a, bcap;
    for (const auto& [x, v] : w) {
        if (v > 0) {
            sup.push_back(x);
            a.push_back(v);
        } else if (v < 0) {
            dem.push_back(x);
            bcap.push_back(-v);
        }
    }
    const std::size_t S = sup.size(), T = dem.size();
    if (S == 0) return Q(0);
    // nodes: 0 source, 1..S supplies, S+1..S+T demands, S+T+1 sink
    const std::size_t V = S + T + 2, src = 0, snk = S + T + 1;
    struct Edge {
        std::size_t to;
        Q cap;  // negative means unbounded
        Q cost;
        std::size_t rev;
    };
    std::vector<std::vector<Edge>> g(V);
    auto add_edge = [&](std::size_t u, std::size_t v, const Q& cap, const Q& cost) {
        g[u].push_back({v, cap, cost, g[v].size()});
        g[v].push_back({u, Q(0), Q(-cost), g[u].size() - 1});
    };
    for (std::size_t i = 0; i < S; ++i) add_edge(src, 1 + i, a[i], Q(0));
    for (std::size_t i = 0; i < S; ++i)
        for (std::size_t j = 0; j < T; ++j) add_edge(1 + i, S + 1 + j, Q(-1), sp.d(sup[i], dem[j]));
    for (std::size_t j = 0; j < T; ++j) add_edge(S + 1 + j, snk, bcap[j], Q(0));

    auto residual = [](const Edge& e) { return e.cap < 0 || e.cap > 0; };
    Q cost = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        std::vector<std::optional<Q>> dist(V);
        std::vector<std::pair<std::size_t, std::size_t>> prev(V, {V, 0});
        dist[src] = Q(0);
        for (std::size_t round = 0; round + 1 < V; ++round) {
            bool changed = false;
            for (std::size_t u = 0; u < V; ++u) {
                if (!dist[u]) continue;
                for (std::size_t ei = 0; ei < g[u].size(); ++ei) {
                    const Edge& e = g[u][ei];
                    if (!residual(e)) continue;
                    Q nd = *dist[u] + e.cost;
                    if (!dist[e.to] || nd < *dist[e.to]) {
                        dist[e.to] = nd;
                        prev[e.to] = {u, ei};
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        if (!dist[snk]) return cost;
        std::optional<Q> push;
        for (std::size_t v = snk; v != src; v = prev[v].first) {
            const Edge& e = g[prev[v].first][prev[v].second];
            if (e.cap >= 0 && (!push || e.cap < *push)) push = e.cap;
        }
        for (std::size_t v = snk; v != src; v = prev[v].first) {
            Edge& e = g[prev[v].first][prev[v].second];
            if (e.cap >= 0) e.cap -= *push;
            Edge& r = g[v][e.rev];
            if (r.cap >= 0) r.cap += *push;
        }
        cost += *push * *dist[snk];
    }
    throw std::logic_error("transport solver did not terminate");
}

MatchingResult matching_min_check(const FiniteMetricSpace& space, const std::vector<IndexPair>& pairs,
                                  std::size_t exhaustive_limit) {
    MatchingResult r;
    r.identity_cost = 0;
    const std::size_t n = pairs.size();
    for (const auto& [u, v] : pairs) {
        if (u >= space.size() || v >= space.size()) throw DomainError("pair index out of range");
        r.identity_cost += space.d(u, v);
    }
    r.best_cost = r.identity_cost;
    if (n <= 1) return r;
    QMat cost(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cost[i][j] = space.d(pairs[i].first, pairs[j].second);
    Assignment best = n <= exhaustive_limit ? min_assignment_exhaustive(cost) : min_assignment_hungarian(cost);
    r.best_cost = best.cost;
    if (best.cost < r.identity_cost) {
        r.identity_optimal = false;
        r.witness = best.perm;
    }
    return r;
}

FreeElement molecule_sum(SpacePtr sp, const MoleculeFamily& fam) {
    if (!fam.signs.empty() && fam.signs.size() != fam.pairs.size()) throw DomainError("sign count differs from pair count");
    FreeElement acc(sp, {});
    for (std::size_t g = 0; g < fam.pairs.size(); ++g) {
        auto m = FreeElement::molecule(sp, fam.pairs[g].first, fam.pairs[g].second);
        if (!fam.signs.empty() && fam.signs[g] < 0) m = scale(Q(-1), m);
        acc = add(acc, m);
    }
    return acc;
}

Thm310Report check_thm310(const MetricModel& model, std::size_t N) {
    const auto& lim = model.limits;
    if (!lim.psi) throw LimitsUnavailable(model.name + ": psi not declared");
    if (!lim.L) throw LimitsUnavailable(model.name + ": L not declared");
    if (!lim.phi_liminf) throw LimitsUnavailable(model.name + ": liminf of phi not declared");
    Thm310Report rep;
    const Q L = *lim.L;
    if (L <= 0 || !lim.bounded) {
        rep.passed = false;
        rep.failed_clause = "uniformly-discrete";
        return rep;
    }
    auto idx = model.sequence_indices(N);
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            long n = idx[a], m = idx[b];
            Q phi = model.d_index(n, m) - L;
            Q rhs = lim.psi(n) + lim.psi(m);
            if (!(phi > rhs)) {
                rep.passed = false;
                rep.failed_clause = "ii";
                rep.witness = {n, m};
                rep.witness_values = {phi, rhs};
                return rep;
            }
        }
    if (*lim.phi_liminf < 0) {
        rep.passed = false;
        rep.failed_clause = "iii";
        rep.witness_values = {*lim.phi_liminf};
    }
    return rep;
}

FreeElement project(const MoleculeFamily& molecules, const std::vector<LipschitzFunction>& duals, const FreeElement& mu) {
    if (duals.size() != molecules.pairs.size()) throw DomainError("duals and molecules differ in number");
    FreeElement acc(mu.space, {});
    for (std::size_t g = 0; g < duals.size(); ++g) {
        Q c = pairing(mu, duals[g]);
        if (c == 0) continue;
        acc = add(acc, scale(c, FreeElement::molecule(mu.space, molecules.pairs[g].first, molecules.pairs[g].second)));
    }
    return acc;
}

ComplementationReport complementation_test(const MoleculeFamily& molecules, const std::vector<LipschitzFunction>& duals,
                                           const std::vector<FreeElement>& samples) {
    if (duals.size() != molecules.pairs.size()) throw DomainError("duals and molecules differ in number");
    for (const auto& f : duals)
        if (lip_norm(f) > 1) throw PreconditionError("dual function with norm above 1");
    ComplementationReport rep;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& mu = samples[s];
        Q nm = free_norm_lp(mu).norm;
        Q coeff_sum = 0;
        for (const auto& f : duals) coeff_sum += qabs(pairing(mu, f));
        if (coeff_sum > nm) rep.failures.push_back({s, "coefficients", coeff_sum, nm});
        Q np = free_norm_lp(project(molecules, duals, mu)).norm;
        if (np > nm) rep.failures.push_back({s, "projection", np, nm});
        ++rep.samples;
    }
    rep.passed = rep.failures.empty();
    return rep;
}

}  // namespace lipwb
