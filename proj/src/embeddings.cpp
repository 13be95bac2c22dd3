#include "lipwb/embeddings.hpp"

#include "lipwb/errors.hpp"

#include <set>

namespace lipwb {

namespace {

CheckResult fail(std::string clause, std::vector<std::size_t> w, QVec vals) {
    CheckResult r;
    r.passed = false;
    r.clause = std::move(clause);
    r.witness = std::move(w);
    r.values = std::move(vals);
    return r;
}

std::size_t idx_u(long k) { return static_cast<std::size_t>(k); }

void check_rows(const FiniteMetricSpace& sp, std::size_t r) {
    if (r >= sp.size()) throw DomainError("point index out of range: " + std::to_string(r));
}

std::optional<std::size_t> argmax_abs(const QVec& a) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && (!best || qabs(a[i]) > qabs(a[*best]))) best = i;
    return best;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        bool prime = true;
        for (long q : out) {
            if (q * q > p) break;
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(p);
    }
    return out;
}

// Witness closure shared by the pair families: the pair of the largest coefficient.
std::function<std::optional<Witness>(const QVec&)> pair_witness(std::vector<IndexPair> pairs) {
    return [pairs](const QVec& a) -> std::optional<Witness> {
        auto n0 = argmax_abs(a);
        if (!n0) return std::nullopt;
        Witness w;
        w.point = pairs[*n0].first;
        w.partner = pairs[*n0].second;
        w.residue = 0;
        return w;
    };
}

void require_off_base(const std::vector<std::size_t>& rows, const std::string& who) {
    for (auto r : rows)
        if (r == 0) throw DomainError(who + ": anchor coincides with the base point");
}

QVec radii(const FiniteMetricSpace& sp) {
    QVec R(sp.size());
    for (std::size_t p = 0; p < sp.size(); ++p) R[p] = min_positive_radius(sp, p);
    return R;
}

}  // namespace

std::string to_string(Target t) { return t == Target::Sup ? "sup-norm" : "sum-norm"; }

CheckResult check_prop31(const FiniteMetricSpace& sp, const std::vector<std::size_t>& points,
                         const std::vector<std::size_t>& partners) {
    if (points.size() != partners.size()) throw DomainError("points and partners differ in number");
    std::set<std::size_t> seen;
    for (std::size_t g = 0; g < points.size(); ++g) {
        check_rows(sp, points[g]);
        check_rows(sp, partners[g]);
        if (!seen.insert(points[g]).second) throw DomainError("points must be distinct");
        if (points[g] == partners[g]) throw DomainError("partner equals its point");
    }
    for (std::size_t g = 0; g < points.size(); ++g) {
        Q R = min_positive_radius(sp, points[g]);
        if (sp.d(points[g], partners[g]) != R) return fail("radius", {points[g], partners[g]}, {sp.d(points[g], partners[g]), R});
    }
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            Q lhs = sp.d(points[a], points[b]);
            Q rhs = sp.d(points[a], partners[a]) + sp.d(points[b], partners[b]);
            if (lhs < rhs) return fail("separation", {points[a], points[b]}, {lhs, rhs});
        }
    return {};
}

CheckResult check_thm34(const FiniteMetricSpace& sp, const std::vector<IndexPair>& pairs) {
    for (const auto& [p, q] : pairs) {
        check_rows(sp, p);
        check_rows(sp, q);
        if (p == q) throw DomainError("pair with equal points");
    }
    for (const auto& [p, q] : pairs) {
        Q half = sp.d(p, q) / 2;
        Q Rp = min_positive_radius(sp, p), Rq = min_positive_radius(sp, q);
        if (Rp < half) return fail("radius", {p, q}, {Rp, half});
        if (Rq < half) return fail("radius", {q, p}, {Rq, half});
    }
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (a == b) continue;
            auto [pa, qa] = pairs[a];
            auto [pb, qb] = pairs[b];
            Q lhs = sp.d(pa, qa) + sp.d(pb, qb);
            Q m = std::min({sp.d(pa, pb), sp.d(pa, qb), sp.d(qa, pb), sp.d(qa, qb)});
            if (lhs > 2 * m) return fail("cross", {pa, qa, pb, qb}, {lhs, Q(2 * m)});
        }
    return {};
}

CheckResult check_thm37(const FiniteMetricSpace& sp, const std::vector<IndexPair>& pairs) {
    for (const auto& [p, q] : pairs) {
        check_rows(sp, p);
        check_rows(sp, q);
        if (p == q) throw DomainError("pair with equal points");
    }
    const QVec R = radii(sp);
    for (const auto& [p, q] : pairs)
        if (sp.d(p, q) > R[p] + R[q]) return fail("1", {p, q}, {sp.d(p, q), Q(R[p] + R[q])});
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            if (a == b) continue;
            auto [pa, qa] = pairs[a];
            auto [pb, qb] = pairs[b];
            Q s = sp.d(pa, qa) + sp.d(pb, qb);
            Q c2 = s + R[pa] + R[pb] - R[qa] - R[qb];
            if (c2 > 2 * sp.d(pa, pb)) return fail("2", {pa, qa, pb, qb}, {c2, Q(2 * sp.d(pa, pb))});
            Q c3 = s + R[pa] - R[pb] - R[qa] + R[qb];
            if (c3 > 2 * sp.d(pa, qb)) return fail("3", {pa, qa, pb, qb}, {c3, Q(2 * sp.d(pa, qb))});
            Q c4 = s - R[pa] - R[pb] + R[qa] + R[qb];
            if (c4 > 2 * sp.d(qa, qb)) return fail("4", {pa, qa, pb, qb}, {c4, Q(2 * sp.d(qa, qb))});
        }
    return {};
}

CheckResult check_prop42(const FiniteMetricSpace& sp, const std::vector<std::size_t>& points) {
    for (auto p : points) check_rows(sp, p);
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (points[a] == points[b]) throw DomainError("points must be distinct");
            Q lhs = sp.d(points[a], points[b]);
            Q rhs = min_positive_radius(sp, points[a]) + min_positive_radius(sp, points[b]);
            if (lhs < rhs) return fail("separation", {points[a], points[b]}, {lhs, rhs});
        }
    return {};
}

CheckResult check_thm43(const MetricModel& model, std::size_t N) {
    const auto& lim = model.limits;
    if (!lim.L_n || !lim.L) throw LimitsUnavailable(model.name + ": L(n) and L must be declared");
    const Q L = *lim.L;
    auto sp = truncate(model, N);
    auto idx = model.sequence_indices(N);
    if (!lim.monotone_tails) return fail("i", {}, {});
    // (i) d(p_n, p_m) non-increasing in m (and so in n by symmetry)
    for (long n : idx) {
        std::optional<long> prev;
        for (long m : idx) {
            if (m == n) continue;
            if (prev && model.d_index(n, m) > model.d_index(n, *prev))
                return fail("i", {idx_u(n), idx_u(*prev), idx_u(m)}, {model.d_index(n, *prev), model.d_index(n, m)});
            prev = m;
        }
    }
    // (ii) R(p_k) >= L(k) - L/2, R over the whole space: the tail contributes L(k)
    for (long k : idx) {
        Q R = std::min(min_positive_radius(*sp, model.row_of(k)), lim.L_n(k));
        if (R < lim.L_n(k) - L / 2) return fail("ii", {idx_u(k)}, {R, Q(lim.L_n(k) - L / 2)});
    }
    // (iii) L(k) + L(l) <= L + d(p_k, p_l)
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            long k = idx[a], l = idx[b];
            Q lhs = lim.L_n(k) + lim.L_n(l), rhs = L + model.d_index(k, l);
            if (lhs > rhs) return fail("iii", {idx_u(k), idx_u(l)}, {lhs, rhs});
        }
    return {};
}

CheckResult check_thm45(const MetricModel& model, long first, std::size_t N) {
    const auto& lim = model.limits;
    if (!lim.origin_limit) throw LimitsUnavailable(model.name + ": limit of d(p_n, 0) not declared");
    if (!lim.L_n || !lim.L) throw LimitsUnavailable(model.name + ": L(n) and L must be declared");
    const Q D = *lim.origin_limit;
    auto sp = truncate(model, N);
    std::vector<long> idx;
    for (long k : model.sequence_indices(N))
        if (k >= first && model.row_of(k) != 0) idx.push_back(k);
    if (!lim.monotone_tails) return fail("i", {}, {});
    auto d0 = [&](long n) { return sp->d(model.row_of(n), 0); };
    // (i) d(p_n, 0) = R(p_n); the tail beyond the truncation contributes L(n)
    for (long n : idx) {
        Q R = std::min(min_positive_radius(*sp, model.row_of(n)), lim.L_n(n));
        if (d0(n) != R) return fail("i", {idx_u(n)}, {d0(n), R});
    }
    // (ii) strictly decreasing to D > 0
    if (D <= 0) return fail("ii", {}, {D});
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (d0(idx[a]) <= D) return fail("ii", {idx_u(idx[a])}, {d0(idx[a]), D});
        if (a > 0 && d0(idx[a]) >= d0(idx[a - 1]))
            return fail("ii", {idx_u(idx[a - 1]), idx_u(idx[a])}, {d0(idx[a - 1]), d0(idx[a])});
    }
    // (iii) 2D <= d(p_n, p_m), tails included through L(n) and L
    if (2 * D > *lim.L) return fail("iii", {}, {Q(2 * D), *lim.L});
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (2 * D > lim.L_n(idx[a])) return fail("iii", {idx_u(idx[a])}, {Q(2 * D), lim.L_n(idx[a])});
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (2 * D > model.d_index(idx[a], idx[b]))
                return fail("iii", {idx_u(idx[a]), idx_u(idx[b])}, {Q(2 * D), model.d_index(idx[a], idx[b])});
    }
    return {};
}

CheckResult check_thm46(const MetricModel& model, const EpsSpec& eps, std::size_t N) {
    const auto& lim = model.limits;
    auto sp = truncate(model, N);
    std::vector<long> idx;
    for (long k : model.sequence_indices(N))
        if (model.row_of(k) != 0) idx.push_back(k);
    auto g = [&](long n) { return Q(sp->d(model.row_of(n), 0) - eps.eps(n)); };
    // (i) ratio <= 1
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            long n = idx[a], m = idx[b];
            Q num = g(n) + g(m), den = model.d_index(n, m);
            if (num > den) return fail("i", {idx_u(n), idx_u(m)}, {num, den});
        }
    // (i) ratio -> 1 as m grows, from declared closed forms
    if (lim.bounded) {
        if (!lim.L_n || !eps.tail_gap) throw LimitsUnavailable(model.name + ": L(n) and the tail gap are needed");
        for (long n : idx)
            if (g(n) + *eps.tail_gap != lim.L_n(n)) return fail("i-limit", {idx_u(n)}, {Q(g(n) + *eps.tail_gap), lim.L_n(n)});
    } else if (!lim.excess_bounded) {
        throw LimitsUnavailable(model.name + ": unbounded model without a bounded-excess declaration");
    }
    // (ii) 0 <= d(p_n, 0) - eps_n <= R(p_n)
    for (long n : idx) {
        Q R = min_positive_radius(*sp, model.row_of(n));
        if (lim.bounded) {
            if (!lim.monotone_tails) throw LimitsUnavailable(model.name + ": tail infimum needs monotone tails");
            R = std::min(R, lim.L_n(n));
        }
        if (g(n) < 0 || g(n) > R) return fail("ii", {idx_u(n)}, {g(n), R});
    }
    return {};
}

std::vector<std::vector<long>> prime_orbits(const std::vector<long>& indices) {
    std::vector<std::vector<long>> out;
    if (indices.empty()) return out;
    std::set<long> S(indices.begin(), indices.end());
    const long top = *S.rbegin();
    for (long p : primes_up_to(top)) {
        std::vector<long> orbit;
        for (long x = p; x <= top; x *= p)
            if (S.count(x)) orbit.push_back(x);
        if (orbit.size() < 2) break;
        out.push_back(std::move(orbit));
    }
    return out;
}

Family build_prop23(SpacePtr sp) {
    Family fam;
    fam.theorem = "prop23";
    fam.space = sp;
    const std::size_t n = sp->size();
    for (std::size_t k = 1; k < n; ++k) {
        QVec v(n, Q(0));
        v[k] = 1;
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = [](const QVec& a) -> std::optional<Witness> {
        auto n0 = argmax_abs(a);
        if (!n0) return std::nullopt;
        return Witness{0, *n0 + 1, Q(0), false};
    };
    return fam;
}

Family build_prop31(SpacePtr sp, const std::vector<std::size_t>& points, const std::vector<std::size_t>& partners) {
    if (points.size() != partners.size()) throw DomainError("points and partners differ in number");
    require_off_base(points, "prop31");
    Family fam;
    fam.theorem = "prop31";
    fam.space = sp;
    for (std::size_t g = 0; g < points.size(); ++g) {
        QVec v(sp->size(), Q(0));
        v[points[g]] = min_positive_radius(*sp, points[g]);
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(points[g], partners[g]);
    }
    fam.witness = pair_witness(fam.anchors);
    return fam;
}

Family build_thm34(SpacePtr sp, const std::vector<IndexPair>& pairs) {
    Family fam;
    fam.theorem = "thm34";
    fam.space = sp;
    fam.anchors = pairs;
    for (const auto& [p, q] : pairs) {
        require_off_base({p, q}, "thm34");
        QVec v(sp->size(), Q(0));
        v[p] = sp->d(p, q) / 2;
        v[q] = -sp->d(p, q) / 2;
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = pair_witness(pairs);
    return fam;
}

Family build_thm37(SpacePtr sp, const std::vector<IndexPair>& pairs) {
    Family fam;
    fam.theorem = "thm37";
    fam.space = sp;
    fam.anchors = pairs;
    for (const auto& [p, q] : pairs) {
        require_off_base({p, q}, "thm37");
        Q d = sp->d(p, q), Rp = min_positive_radius(*sp, p), Rq = min_positive_radius(*sp, q);
        QVec v(sp->size(), Q(0));
        v[p] = (d + Rp - Rq) / 2;
        v[q] = (-d + Rp - Rq) / 2;
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = pair_witness(pairs);
    return fam;
}

Family build_prop42(SpacePtr sp, const std::vector<std::size_t>& points) {
    require_off_base(points, "prop42");
    Family fam;
    fam.theorem = "prop42";
    fam.space = sp;
    for (auto p : points) {
        QVec v(sp->size(), Q(0));
        v[p] = min_positive_radius(*sp, p);
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = [points](const QVec& a) -> std::optional<Witness> {
        auto n0 = argmax_abs(a);
        if (!n0) return std::nullopt;
        return Witness{points[*n0], std::nullopt, Q(0), false};
    };
    return fam;
}

Family build_thm43(const MetricModel& model, std::size_t N) {
    const auto& lim = model.limits;
    if (!lim.L_n || !lim.L) throw LimitsUnavailable(model.name + ": L(n) and L must be declared");
    const Q L = *lim.L;
    auto sp = truncate(model, N);
    auto orbits = prime_orbits(model.sequence_indices(N));
    Family fam;
    fam.theorem = "thm43";
    fam.space = sp;
    fam.limit_family = true;
    for (const auto& orb : orbits) {
        QVec v(sp->size(), Q(0));
        v[model.row_of(orb[0])] = lim.L_n(orb[0]) - L / 2;
        for (std::size_t m = 1; m < orb.size(); ++m) v[model.row_of(orb[m])] = -L / 2;
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(model.row_of(orb[0]), model.row_of(orb.back()));
    }
    auto Lr = lim.L_n;
    fam.witness = [orbits, model, Lr](const QVec& a) -> std::optional<Witness> {
        auto n0 = argmax_abs(a);
        if (!n0) return std::nullopt;
        const auto& orb = orbits[*n0];
        Q along = qabs(a[*n0]) * Lr(orb[0]) / model.d_index(orb[0], orb.back());
        return Witness{model.row_of(orb[0]), std::nullopt, Q(linf(a) - along), true};
    };
    return fam;
}

Family build_thm45(const MetricModel& model, long first, std::size_t N) {
    const auto& lim = model.limits;
    if (!lim.origin_limit) throw LimitsUnavailable(model.name + ": limit of d(p_n, 0) not declared");
    const Q D = *lim.origin_limit;
    auto sp = truncate(model, N);
    std::vector<long> idx;
    for (long k : model.sequence_indices(N))
        if (k >= first && model.row_of(k) != 0) idx.push_back(k);
    auto orbits = prime_orbits(idx);
    Family fam;
    fam.theorem = "thm45";
    fam.space = sp;
    fam.limit_family = true;
    for (const auto& orb : orbits) {
        QVec v(sp->size(), Q(0));
        for (long x : orb) v[model.row_of(x)] = D;
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(0, model.row_of(orb.back()));
    }
    fam.witness = [orbits, model, D](const QVec& a) -> std::optional<Witness> {
        if (!argmax_abs(a)) return std::nullopt;
        Q best = 0;
        for (std::size_t n = 0; n < a.size() && n < orbits.size(); ++n)
            for (long x : orbits[n]) best = std::max(best, Q(qabs(a[n]) * D / model.row_rule(model.row_of(x), 0)));
        return Witness{0, std::nullopt, Q(linf(a) - best), false};
    };
    return fam;
}

Family build_thm46(const MetricModel& model, const EpsSpec& eps, std::size_t N, std::string theorem) {
    auto sp = truncate(model, N);
    std::vector<long> idx;
    for (long k : model.sequence_indices(N))
        if (model.row_of(k) != 0) idx.push_back(k);
    auto orbits = prime_orbits(idx);
    auto e = eps.eps;
    auto g = [model, e](long n) { return Q(model.row_rule(model.row_of(n), 0) - e(n)); };
    Family fam;
    fam.theorem = std::move(theorem);
    fam.space = sp;
    fam.limit_family = true;
    for (const auto& orb : orbits) {
        QVec v(sp->size(), Q(0));
        v[model.row_of(orb[0])] = g(orb[0]);
        for (std::size_t m = 1; m < orb.size(); ++m) v[model.row_of(orb[m])] = -g(orb[m]);
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(model.row_of(orb[0]), model.row_of(orb.back()));
    }
    fam.witness = [orbits, model, g](const QVec& a) -> std::optional<Witness> {
        auto n0 = argmax_abs(a);
        if (!n0) return std::nullopt;
        const auto& orb = orbits[*n0];
        Q along = qabs(a[*n0]) * (g(orb[0]) + g(orb.back())) / model.d_index(orb[0], orb.back());
        return Witness{model.row_of(orb[0]), std::nullopt, Q(linf(a) - along), true};
    };
    return fam;
}

int star_sign(std::size_t gamma, std::size_t n) { return ((gamma - 1) >> (n - 1)) & 1 ? -1 : 1; }

namespace {

std::size_t sign_member(const QVec& a) {
    std::size_t g = 1;
    for (std::size_t n = 0; n < a.size(); ++n)
        if (a[n] < 0) g += std::size_t{1} << n;
    return g;
}

}  // namespace

Family build_thm51(SpacePtr sp, const std::vector<IndexPair>& pairs, std::size_t levels) {
    if (pairs.size() != (std::size_t{1} << levels)) throw DomainError("thm51: need 2^levels pairs");
    Family fam;
    fam.theorem = "thm51";
    fam.space = sp;
    fam.anchors = pairs;
    fam.target = Target::Sum;
    const std::size_t N = sp->size();
    for (std::size_t n = 1; n <= levels; ++n) {
        QVec v(N, Q(0));
        for (std::size_t g = 1; g <= pairs.size(); ++g) {
            auto [p, q] = pairs[g - 1];
            Q r = sp->d(p, q);
            for (std::size_t x = 0; x < N; ++x) {
                Q t = r - sp->d(p, x);
                if (t > 0) v[x] += star_sign(g, n) * t;
            }
        }
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = [pairs](const QVec& a) -> std::optional<Witness> {
        if (!argmax_abs(a)) return std::nullopt;
        auto [p, q] = pairs[sign_member(a) - 1];
        return Witness{q, p, Q(0), false};
    };
    return fam;
}

Family build_thm51_star(std::size_t levels) {
    auto model = catalog("thm51star", {{"levels", Q(static_cast<long>(levels))}});
    const std::size_t count = std::size_t{1} << levels;
    auto sp = truncate(model, 2 * count);
    std::vector<IndexPair> pairs;
    for (std::size_t g = 1; g <= count; ++g) pairs.emplace_back(2 * g - 1, 2 * g - 2);
    return build_thm51(sp, pairs, levels);
}

Family build_prop53(SpacePtr sp, const std::vector<IndexPair>& pairs, std::size_t levels) {
    if (pairs.size() != (std::size_t{1} << levels)) throw DomainError("prop53: need 2^levels pairs");
    Family fam;
    fam.theorem = "prop53";
    fam.space = sp;
    fam.anchors = pairs;
    fam.target = Target::Sum;
    for (std::size_t n = 1; n <= levels; ++n) {
        QVec v(sp->size(), Q(0));
        for (std::size_t g = 1; g <= pairs.size(); ++g) {
            v[pairs[g - 1].first] += Q(star_sign(g, n), 2);
            v[pairs[g - 1].second] -= Q(star_sign(g, n), 2);
        }
        fam.members.emplace_back(sp, std::move(v));
    }
    fam.witness = [pairs](const QVec& a) -> std::optional<Witness> {
        if (!argmax_abs(a)) return std::nullopt;
        auto [p, q] = pairs[sign_member(a) - 1];
        return Witness{p, q, Q(0), false};
    };
    return fam;
}

Family build_prop53_catalog(std::size_t levels) {
    auto model = catalog("prop53", {{"levels", Q(static_cast<long>(levels))}});
    const std::size_t count = std::size_t{1} << levels;
    auto sp = truncate(model, 1 + 2 * count);
    std::vector<IndexPair> pairs;
    for (std::size_t g = 1; g <= count; ++g) pairs.emplace_back(2 * g - 1, 2 * g);
    return build_prop53(sp, pairs, levels);
}

int ternary_sign(std::size_t j, std::size_t n) {
    std::size_t c = j - 1;
    for (std::size_t i = 1; i < n; ++i) c /= 3;
    switch (c % 3) {
        case 1: return 1;
        case 2: return -1;
        default: return 0;
    }
}

Family build_thm57(const Q& c, std::size_t K, std::size_t support) {
    auto model = catalog("thm57", {{"c", c}, {"levels", Q(static_cast<long>(K))}});
    std::size_t J = 1;
    for (std::size_t i = 0; i < support; ++i) J *= 3;
    auto sp = truncate(model, 1 + J * K);
    Family fam;
    fam.theorem = "thm57";
    fam.space = sp;
    fam.target = Target::Sum;
    fam.limit_family = true;
    QVec level(K + 1);
    for (std::size_t k = 1; k <= K; ++k) level[k] = 1 - Q(1) / qpow(c, k);
    for (std::size_t n = 1; n <= support; ++n) {
        QVec v(sp->size(), Q(0));
        for (std::size_t i = 1; i < sp->size(); ++i) {
            std::size_t j = (i - 1) / K + 1, k = (i - 1) % K + 1;
            int s = ternary_sign(j, n);
            if (s) v[i] = s * level[k];
        }
        fam.members.emplace_back(sp, std::move(v));
    }
    Q tail = Q(1) / qpow(c, K);
    fam.witness = [tail](const QVec& a) -> std::optional<Witness> {
        if (!argmax_abs(a)) return std::nullopt;
        return Witness{0, std::nullopt, Q(l1(a) * tail), false};
    };
    return fam;
}

VerificationReport verify_isometry(const Family& fam, const Battery& battery, std::size_t sample_cap) {
    VerificationReport rep;
    rep.theorem = fam.theorem;
    rep.space = fam.space->name;
    rep.target = fam.target;
    rep.seed = battery.seed;
    for (const auto& a : battery.vectors) {
        if (a.size() > fam.members.size()) throw StructuralError("coefficient vector longer than the family");
        ++rep.coeff_count;
        auto f = combine(fam.members, a);
        WitnessSample s;
        s.coeffs = a;
        s.norm = lip_norm(f);
        s.target = fam.target == Target::Sup ? linf(a) : l1(a);
        if (s.target - s.norm > rep.worst_defect) rep.worst_defect = s.target - s.norm;
        bool norm_eq = s.norm == s.target;
        bool norm_le = s.norm <= s.target;
        bool wit_ok = true;
        s.defect = 0;
        s.residue = 0;
        if (auto w = fam.witness ? fam.witness(a) : std::nullopt) {
            s.point = w->point;
            s.partner = w->partner;
            s.residue = w->residue;
            s.defect = s.target - pointwise_sup(f, w->point);
            wit_ok = w->residue_is_bound ? (s.defect >= 0 && s.defect <= w->residue) : s.defect == w->residue;
            if (w->partner && !w->residue_is_bound) wit_ok = wit_ok && qabs(slope(f, w->point, *w->partner)) == s.target - w->residue;
        }
        rep.defects.push_back(s.defect);
        s.ok = norm_eq && wit_ok;
        rep.exact_pass = rep.exact_pass && s.ok;
        rep.norm_bounded = rep.norm_bounded && norm_le;
        rep.residue_pass = rep.residue_pass && wit_ok;
        bool failed = !(fam.limit_family ? (norm_le && wit_ok) : s.ok);
        if (failed) ++rep.failures;
        if (rep.samples.size() < sample_cap || (failed && rep.samples.size() < 4 * sample_cap))
            rep.samples.push_back(std::move(s));
    }
    return rep;
}

bool sign_pattern_matches(const std::vector<LipschitzFunction>& family, const QVec& coeffs, IndexPair pair) {
    if (coeffs.size() > family.size()) throw DomainError("more coefficients than family members");
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (coeffs[n] == 0) continue;
        if (slope(family[n], pair.first, pair.second) != qsign(coeffs[n])) return false;
    }
    return true;
}

bool ell1_sign_check(const std::vector<LipschitzFunction>& family, const QVec& coeffs, IndexPair pair) {
    auto f = combine(family, coeffs);
    if (f.is_zero() || slope(f, pair.first, pair.second) != lip_norm(f))
        throw PreconditionError("the combination does not strongly attain its norm at the given pair");
    return sign_pattern_matches(family, coeffs, pair);
}

}  // namespace lipwb
