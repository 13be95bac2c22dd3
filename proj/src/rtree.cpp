#include "lipwb/rtree.hpp"

#include "lipwb/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lipwb {

namespace {

using Adj = std::vector<std::vector<std::pair<std::size_t, Q>>>;

Adj adjacency(const WeightedTree& t) {
    Adj adj(t.vertices);
    for (const auto& e : t.edges) {
        adj[e.u].emplace_back(e.v, e.length);
        adj[e.v].emplace_back(e.u, e.length);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return adj;
}

// Distances from s and BFS parents.
std::pair<QVec, std::vector<std::size_t>> bfs(const Adj& adj, std::size_t s) {
    const std::size_t n = adj.size();
    QVec dist(n, Q(-1));
    std::vector<std::size_t> parent(n, n);
    dist[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (const auto& [v, len] : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + len;
                parent[v] = u;
                q.push(v);
            }
    }
    return {dist, parent};
}

}  // namespace

void check_tree(const WeightedTree& t) {
    if (t.vertices == 0) throw StructuralError("tree has no vertices");
    if (t.base >= t.vertices) throw StructuralError("tree base out of range");
    if (t.edges.size() + 1 != t.vertices)
        throw StructuralError("a tree on " + std::to_string(t.vertices) + " vertices has " +
                              std::to_string(t.vertices - 1) + " edges, got " + std::to_string(t.edges.size()));
    for (const auto& e : t.edges) {
        if (e.u >= t.vertices || e.v >= t.vertices) throw StructuralError("edge endpoint out of range");
        if (e.u == e.v) throw StructuralError("self-loop at vertex " + std::to_string(e.u));
        if (e.length <= 0) throw StructuralError("edge lengths must be positive");
    }
    auto [dist, parent] = bfs(adjacency(t), 0);
    for (std::size_t v = 0; v < t.vertices; ++v)
        if (dist[v] < 0) throw StructuralError("tree is disconnected: vertex " + std::to_string(v) + " unreachable");
}

std::vector<std::size_t> tree_rows(const WeightedTree& t) {
    std::vector<std::size_t> row(t.vertices);
    std::size_t next = 1;
    for (std::size_t v = 0; v < t.vertices; ++v) row[v] = v == t.base ? 0 : next++;
    return row;
}

SpacePtr tree_metric(const WeightedTree& t) {
    check_tree(t);
    auto adj = adjacency(t);
    auto row = tree_rows(t);
    const std::size_t n = t.vertices;
    QMat d(n, QVec(n));
    std::vector<std::string> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
        labels[row[v]] = "v" + std::to_string(v);
        auto [dist, parent] = bfs(adj, v);
        for (std::size_t w = 0; w < n; ++w) d[row[v]][row[w]] = dist[w];
    }
    return make_space("tree" + std::to_string(n), std::move(d), std::move(labels));
}

FourPointResult four_point_check(const FiniteMetricSpace& sp) {
    FourPointResult res;
    const std::size_t n = sp.size();
    if (n < 4) return res;
    auto key = [n](std::array<std::size_t, 4> s) {
        std::sort(s.begin(), s.end());
        return ((s[0] * n + s[1]) * n + s[2]) * n + s[3];
    };
    // A 4-set satisfies the condition for every ordering iff the two largest
    // of its three pair sums coincide.
    std::set<std::size_t> bad;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = c + 1; e < n; ++e) {
                    std::array<Q, 3> s{sp.d(a, b) + sp.d(c, e), sp.d(a, c) + sp.d(b, e), sp.d(a, e) + sp.d(b, c)};
                    std::sort(s.begin(), s.end());
                    if (s[1] != s[2]) bad.insert(key({a, b, c, e}));
                }
    res.failing_subsets = bad.size();
    if (bad.empty()) return res;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                for (std::size_t s = 0; s < n; ++s) {
                    if (s == p || s == q || s == r || !bad.count(key({p, q, r, s}))) continue;
                    Q lhs = sp.d(p, q) + sp.d(r, s);
                    if (lhs > sp.d(p, s) + sp.d(q, r) && lhs > sp.d(q, s) + sp.d(p, r)) {
                        res.passed = false;
                        res.witness = {p, q, r, s};
                        return res;
                    }
                }
            }
        }
    return res;
}

std::vector<std::size_t> branching_points(const WeightedTree& t) {
    std::vector<std::size_t> deg(t.vertices, 0), out;
    for (const auto& e : t.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    for (std::size_t v = 0; v < t.vertices; ++v)
        if (deg[v] >= 3) out.push_back(v);
    return out;
}

namespace {

bool aligned_step(const FiniteMetricSpace& sp, std::size_t a, std::size_t b, std::size_t c) {
    return sp.d(a, c) == sp.d(a, b) + sp.d(b, c);
}

bool dfs_aligned(const FiniteMetricSpace& sp, std::size_t k, std::vector<std::size_t>& seq, std::vector<bool>& used) {
    if (seq.size() == k) return true;
    for (std::size_t x = 0; x < sp.size(); ++x) {
        if (used[x]) continue;
        if (seq.size() >= 2 && !aligned_step(sp, seq[seq.size() - 2], seq.back(), x)) continue;
        used[x] = true;
        seq.push_back(x);
        if (dfs_aligned(sp, k, seq, used)) return true;
        seq.pop_back();
        used[x] = false;
    }
    return false;
}

}  // namespace

AlignedSearch find_aligned(const FiniteMetricSpace& sp, std::size_t k, std::size_t exhaustive_limit) {
    if (k < 3) throw DomainError("aligned sequences need k >= 3");
    AlignedSearch res;
    res.threshold = exhaustive_limit;
    res.exhaustive = sp.size() <= exhaustive_limit;
    if (k > sp.size()) return res;
    std::vector<std::size_t> seq;
    std::vector<bool> used(sp.size(), false);
    if (res.exhaustive) {
        if (dfs_aligned(sp, k, seq, used)) res.sequence = seq;
        return res;
    }
    for (std::size_t a = 0; a < sp.size(); ++a)
        for (std::size_t b = 0; b < sp.size(); ++b) {
            if (a == b) continue;
            seq = {a, b};
            std::fill(used.begin(), used.end(), false);
            used[a] = used[b] = true;
            while (seq.size() < k) {
                std::optional<std::size_t> nxt;
                for (std::size_t x = 0; x < sp.size() && !nxt; ++x)
                    if (!used[x] && aligned_step(sp, seq[seq.size() - 2], seq.back(), x)) nxt = x;
                if (!nxt) break;
                used[*nxt] = true;
                seq.push_back(*nxt);
            }
            if (seq.size() == k) {
                res.sequence = seq;
                return res;
            }
        }
    return res;
}

TreePipelineResult tree_c0_pipeline(const WeightedTree& t, std::size_t component_threshold,
                                    const std::optional<Battery>& battery) {
    auto sp = tree_metric(t);
    auto fp = four_point_check(*sp);
    if (!fp.passed) throw PreconditionError("four-point condition fails");
    auto adj = adjacency(t);
    auto row = tree_rows(t);
    TreePipelineResult res;

    // case 1: bumps on the hub's neighbors whose nearest point is the hub
    for (std::size_t h = 0; h < t.vertices && !res.which; ++h) {
        if (adj[h].size() < component_threshold) continue;
        std::vector<std::size_t> pts, partners;
        for (const auto& [v, len] : adj[h]) {
            if (v == t.base) continue;
            if (min_positive_radius(*sp, row[v]) != len) continue;
            pts.push_back(row[v]);
            partners.push_back(row[h]);
        }
        if (pts.size() < 2) continue;
        res.which = 1;
        res.hub = h;
        res.points = std::move(pts);
        res.partners = std::move(partners);
    }

    // case 2: odd points along a longest path, paired with their nearest points
    if (!res.which) {
        std::vector<std::size_t> best;
        Q best_len = -1;
        for (std::size_t s = 0; s < t.vertices; ++s) {
            auto [dist, parent] = bfs(adj, s);
            for (std::size_t e = s + 1; e < t.vertices; ++e) {
                if (dist[e] <= best_len) continue;
                std::vector<std::size_t> path;
                for (std::size_t v = e; v != t.vertices; v = parent[v]) path.push_back(v);
                std::reverse(path.begin(), path.end());
                best = std::move(path);
                best_len = dist[e];
            }
        }
        res.which = 2;
        res.path = best;
        for (std::size_t i = 0; i < best.size(); i += 2) {
            std::size_t p = row[best[i]];
            if (p == 0) continue;
            std::optional<std::size_t> q;
            for (std::size_t x = 0; x < sp->size(); ++x)
                if (x != p && (!q || sp->d(p, x) < sp->d(p, *q))) q = x;
            res.points.push_back(p);
            res.partners.push_back(*q);
        }
        if (res.points.empty()) throw PreconditionError("tree too small for an aligned sequence");
    }

    auto chk = check_prop31(*sp, res.points, res.partners);
    if (!chk) throw PreconditionError("distinguished pairs fail the bump hypotheses at clause " + chk.clause);
    res.family = build_prop31(sp, res.points, res.partners);
    res.family.theorem = "tree-c0";
    const std::size_t m = res.family.members.size();
    res.report = verify_isometry(res.family, battery ? *battery
                                                      : standard_battery(m, std::min<std::size_t>(m, 5), 100, kDefaultSeed));
    return res;
}

WeightedTree star_tree(std::size_t leaves, const Q& length) {
    WeightedTree t;
    t.vertices = leaves + 1;
    for (std::size_t i = 1; i <= leaves; ++i) t.edges.push_back({0, i, length});
    return t;
}

WeightedTree path_tree(std::size_t n, const Q& length) {
    WeightedTree t;
    t.vertices = n;
    for (std::size_t i = 1; i < n; ++i) t.edges.push_back({i - 1, i, length});
    return t;
}

WeightedTree caterpillar_tree(std::size_t spine, std::size_t legs) {
    WeightedTree t = path_tree(spine);
    for (std::size_t s = 0; s < spine; ++s)
        for (std::size_t l = 0; l < legs; ++l) t.edges.push_back({s, t.vertices++, Q(1)});
    return t;
}

WeightedTree subdivided_star(std::size_t arms, std::size_t arm_length) {
    WeightedTree t;
    t.vertices = 1;
    for (std::size_t a = 0; a < arms; ++a) {
        std::size_t prev = 0;
        for (std::size_t k = 0; k < arm_length; ++k) {
            t.edges.push_back({prev, t.vertices, Q(1)});
            prev = t.vertices++;
        }
    }
    return t;
}

WeightedTree random_tree(std::mt19937_64& rng, std::size_t n) {
    WeightedTree t;
    t.vertices = n;
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t parent = rng() % i;
        Q len(static_cast<long>(1 + rng() % 8), static_cast<long>(1 + rng() % 4));
        len.canonicalize();
        t.edges.push_back({parent, i, len});
    }
    return t;
}

SpacePtr four_cycle_space() {
    QMat d{{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}};
    return make_space("four-cycle", d, {"a", "b", "c", "d"});
}

}  // namespace lipwb
