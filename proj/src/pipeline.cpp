#include "lipwb/pipeline.hpp"

#include "lipwb/errors.hpp"

#include <algorithm>
#include <set>

namespace lipwb {

std::string to_string(MainCase c) {
    switch (c) {
        case MainCase::BoundedA: return "I-(i)";
        case MainCase::BoundedB: return "I-(ii)";
        case MainCase::Unbounded: return "II";
    }
    return "?";
}

namespace {

std::optional<std::size_t> first_max(const QVec& a) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && (!best || qabs(a[i]) > qabs(a[*best]))) best = i;
    return best;
}

std::string pair_str(long n, long m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

// Uniform class of all sequence pairs; throws on the first pair that disagrees.
bool all_in_A(const MetricModel& model, const std::vector<long>& idx) {
    const auto& lim = model.limits;
    std::optional<bool> cls;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            long n = idx[a], m = idx[b];
            Q phi = model.d_index(n, m) - *lim.L;
            Q sum = lim.psi(n) + lim.psi(m);
            bool in_a = phi >= sum;
            if (!cls) cls = in_a;
            else if (*cls != in_a)
                throw DichotomyError("dichotomy not uniform on range: pair " + pair_str(n, m), n, m, {phi, sum});
        }
    if (!cls) throw DomainError("need at least two sequence points");
    return *cls;
}

Battery default_battery(std::size_t members) {
    return standard_battery(members, std::min<std::size_t>(members, 5), 100, kDefaultSeed);
}

void run_i_i(const MetricModel& model, std::size_t N, PipelineResult& res) {
    const auto& lim = model.limits;
    const Q L = *lim.L;
    auto sp = truncate(model, N);
    auto psi = lim.psi;
    // eps_n = d(p_n, 0) - L/2 - psi(n); with base p_1 this is L/2 + phi(1,n) - psi(n)
    EpsSpec spec;
    spec.eps = [model, L, psi](long n) -> Q { return model.row_rule(model.row_of(n), 0) - L / 2 - psi(n); };
    spec.tail_gap = L / 2;
    for (std::size_t r = 0; r < N; ++r) res.subspace_indices.push_back(model.index_of_row(r));
    for (long n : model.sequence_indices(N))
        if (model.row_of(n) != 0) res.eps.emplace_back(n, spec.eps(n));
    auto chk = check_thm46(model, spec, N);
    if (!chk) res.invariant_failures.push_back("eps hypotheses fail at clause " + chk.clause);
    for (const auto& [n, e] : res.eps) {
        Q want = model.row_rule(model.row_of(n), 0) - L / 2 - psi(n);
        if (e != want) res.invariant_failures.push_back("eps formula mismatch at n=" + std::to_string(n));
    }
    res.family = build_thm46(model, spec, N, "main-I-(i)");
}

void run_i_ii(const MetricModel& model, std::size_t N, PipelineResult& res) {
    const auto& lim = model.limits;
    if (!lim.monotone_tails) throw LimitsUnavailable(model.name + ": the subsequence search needs monotone tails");
    const Q L = *lim.L;
    auto psi = lim.psi;
    auto phi = [&](long n, long m) { return Q(model.d_index(n, m) - L); };
    const long first = model.sequence_indices(N).front();
    const long last = model.sequence_indices(N).back();

    long s = first, t = first + 1;
    while (t <= last) {
        Q e = (-phi(s, t) + psi(s) + psi(t)) / 6;
        res.sigma.push_back(s);
        res.tau.push_back(t);
        res.pair_eps.push_back(e);
        // Smallest next sigma meeting the four bounds; under monotone tails the
        // worst case over i >= sigma, j >= sigma + 1 is i = sigma, j = sigma + 1.
        long next = -1;
        for (long c = t + 1; c + 1 <= last; ++c) {
            if (qabs(phi(c, c + 1)) < e && qabs(psi(c)) < e && qabs(phi(s, c) - psi(s)) < e &&
                qabs(phi(t, c) - psi(t)) < e) {
                next = c;
                break;
            }
        }
        if (next < 0) break;
        s = next;
        t = next + 1;
    }
    if (res.sigma.empty()) throw DomainError("no sigma/tau pair fits in the truncation");

    // Base: the smallest index outside every pair.
    std::set<long> used;
    for (std::size_t k = 0; k < res.sigma.size(); ++k) used.insert({res.sigma[k], res.tau[k]});
    long base = -1;
    for (long k : model.sequence_indices(N))
        if (!used.count(k)) {
            base = k;
            break;
        }
    if (model.base_is_p1 && base < 0) throw DomainError("every truncation point is paired; no base left");

    auto full = truncate(model, N);
    SpacePtr sp = full;
    auto row = [&](long k) { return model.row_of(k); };
    std::function<std::size_t(long)> row_in = row;
    if (model.base_is_p1 && base != first) {
        std::size_t b = row(base);
        sp = repoint(*full, b);
        row_in = [row, b](long k) {
            std::size_t r = row(k);
            return r == 0 ? b : (r == b ? std::size_t{0} : r);
        };
    }
    res.subspace_indices.push_back(model.base_is_p1 ? base : 0);
    for (long k : model.sequence_indices(N))
        if (k != res.subspace_indices.front()) res.subspace_indices.push_back(k);

    Family fam;
    fam.theorem = "main-I-(ii)";
    fam.space = sp;
    for (std::size_t k = 0; k < res.sigma.size(); ++k) {
        long a = res.sigma[k], b = res.tau[k];
        QVec v(sp->size(), Q(0));
        v[row_in(a)] = (L + phi(a, b) + psi(a) - psi(b)) / 2;
        v[row_in(b)] = -(L + phi(a, b) - psi(a) + psi(b)) / 2;
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(row_in(a), row_in(b));
    }
    auto anchors = fam.anchors;
    fam.witness = [anchors](const QVec& a) -> std::optional<Witness> {
        auto n0 = first_max(a);
        if (!n0) return std::nullopt;
        return Witness{anchors[*n0].first, anchors[*n0].second, Q(0), false};
    };
    res.family = std::move(fam);

    // invariants: eps_n > 0 and the four bounds at the chosen next pair
    for (std::size_t k = 0; k < res.sigma.size(); ++k) {
        Q e = res.pair_eps[k];
        if (e <= 0) res.invariant_failures.push_back("eps_" + std::to_string(k + 1) + " not positive");
        if (k + 1 < res.sigma.size()) {
            long c = res.sigma[k + 1];
            if (!(qabs(phi(c, c + 1)) < e && qabs(psi(c)) < e && qabs(phi(res.sigma[k], c) - psi(res.sigma[k])) < e &&
                  qabs(phi(res.tau[k], c) - psi(res.tau[k])) < e))
                res.invariant_failures.push_back("smallness bounds fail after pair " + std::to_string(k + 1));
        }
    }
}

void run_ii(const MetricModel& model, std::size_t N, PipelineResult& res) {
    auto full = truncate(model, N);
    std::vector<std::size_t> rows{0};
    QVec& c = res.c;
    c.push_back(Q(1));
    std::vector<bool> used(N, false);
    used[0] = true;
    for (;;) {
        const std::size_t n = rows.size();
        Q M = 0, Dn = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                M = std::max(M, Q(full->d(rows[a], rows[b]) + c[a]));
                Dn = std::max(Dn, full->d(rows[a], rows[b]));
            }
        std::optional<std::size_t> pick;
        for (std::size_t r = 0; r < N && !pick; ++r) {
            if (used[r]) continue;
            bool ok = true;
            for (auto k : rows)
                if (full->d(k, r) <= Q(static_cast<long>(n)) * M) {
                    ok = false;
                    break;
                }
            if (ok) pick = r;
        }
        if (!pick) break;
        used[*pick] = true;
        rows.push_back(*pick);
        Q Dnext = Dn;
        for (auto k : rows) Dnext = std::max(Dnext, full->d(k, *pick));
        c.push_back(Dnext - M);
    }
    for (auto r : rows) res.subspace_indices.push_back(model.index_of_row(r));
    auto sp = subspace(*full, rows, full->name + "|M0");

    // invariants
    const std::size_t K = rows.size();
    for (std::size_t n = 0; n < K; ++n) {
        if (c[n] <= 0) res.invariant_failures.push_back("c_" + std::to_string(n + 1) + " not positive");
        if (K > 1 && c[n] > min_positive_radius(*sp, n))
            res.invariant_failures.push_back("c_" + std::to_string(n + 1) + " exceeds R");
        for (std::size_t m = n + 1; m < K; ++m)
            if (c[n] + c[m] > sp->d(n, m))
                res.invariant_failures.push_back("c_" + std::to_string(n + 1) + " + c_" + std::to_string(m + 1) +
                                                 " exceeds the distance");
    }

    // +-c on prime powers of positions 1..K
    std::vector<long> pos;
    for (std::size_t k = 1; k <= K; ++k) pos.push_back(static_cast<long>(k));
    auto orbits = prime_orbits(pos);
    Family fam;
    fam.theorem = "main-II";
    fam.space = sp;
    fam.limit_family = true;
    auto at = [](long k) { return static_cast<std::size_t>(k - 1); };
    for (const auto& orb : orbits) {
        QVec v(K, Q(0));
        v[at(orb[0])] = c[at(orb[0])];
        for (std::size_t m = 1; m < orb.size(); ++m) v[at(orb[m])] = -c[at(orb[m])];
        fam.members.emplace_back(sp, std::move(v));
        fam.anchors.emplace_back(at(orb[0]), at(orb.back()));
    }
    QVec cc = c;
    fam.witness = [orbits, cc, sp, at](const QVec& a) -> std::optional<Witness> {
        auto n0 = first_max(a);
        if (!n0) return std::nullopt;
        const auto& orb = orbits[*n0];
        std::size_t p = at(orb[0]), q = at(orb.back());
        Q along = qabs(a[*n0]) * (cc[p] + cc[q]) / sp->d(p, q);
        return Witness{p, std::nullopt, Q(linf(a) - along), true};
    };
    res.family = std::move(fam);
}

}  // namespace

PipelineResult main_theorem_pipeline(const MetricModel& model, std::size_t N, const std::optional<Battery>& battery) {
    PipelineResult res;
    const auto& lim = model.limits;
    if (lim.bounded) {
        if (!lim.psi || !lim.L) throw LimitsUnavailable(model.name + ": Case I needs L and psi");
        if (*lim.L <= 0) throw DomainError(model.name + ": sequence not uniformly separated (L = 0)");
        if (all_in_A(model, model.sequence_indices(N))) {
            res.which = MainCase::BoundedA;
            run_i_i(model, N, res);
        } else {
            res.which = MainCase::BoundedB;
            run_i_ii(model, N, res);
        }
    } else {
        res.which = MainCase::Unbounded;
        run_ii(model, N, res);
    }
    if (res.family.members.empty()) throw DomainError("truncation too small for a family with one member");
    res.report = verify_isometry(res.family, battery ? *battery : default_battery(res.family.members.size()));
    return res;
}

}  // namespace lipwb
