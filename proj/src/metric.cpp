#include "lipwb/metric.hpp"

#include "lipwb/errors.hpp"

namespace lipwb {

std::string FiniteMetricSpace::label(std::size_t i) const {
    if (i < labels.size() && !labels[i].empty()) return labels[i];
    return i == 0 ? "0" : "x" + std::to_string(i);
}

ValidationReport validate(const QMat& dist, std::size_t cap) {
    const std::size_t n = dist.size();
    for (const auto& row : dist)
        if (row.size() != n) throw StructuralError("distance matrix is not square");

    ValidationReport rep;
    for (std::size_t i = 0; i < n; ++i)
        if (dist[i][i] != 0) rep.violations.push_back({"diagonal", {i, i}, {dist[i][i]}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && dist[i][j] <= 0) rep.violations.push_back({"positivity", {i, j}, {dist[i][j]}});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist[i][j] != dist[j][i])
                rep.violations.push_back({"symmetry", {i, j}, {dist[i][j], dist[j][i]}});

    std::size_t found = 0;
    Q s;
    for (std::size_t i = 0; i < n && found < cap; ++i)
        for (std::size_t j = 0; j < n && found < cap; ++j) {
            if (j == i) continue;
            for (std::size_t k = i + 1; k < n && found < cap; ++k) {
                if (k == j) continue;
                s = dist[i][j] + dist[j][k];
                if (dist[i][k] > s) {
                    rep.violations.push_back({"triangle", {i, j, k}, {dist[i][k], dist[i][j], dist[j][k]}});
                    ++found;
                }
            }
        }
    rep.passed = rep.violations.empty();
    return rep;
}

ValidationReport validate(const FiniteMetricSpace& space, std::size_t cap) { return validate(space.dist, cap); }

SpacePtr make_space(std::string name, QMat dist, std::vector<std::string> labels) {
    auto rep = validate(dist, 1);
    if (!rep.passed) {
        const auto& v = rep.violations.front();
        std::string msg = name + ": " + v.axiom + " axiom fails at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i) msg += (i ? "," : "") + std::to_string(v.witness[i]);
        msg += ")";
        throw ModelDefinitionError(msg, v.witness);
    }
    auto sp = std::make_shared<FiniteMetricSpace>();
    sp->name = std::move(name);
    sp->dist = std::move(dist);
    sp->labels = std::move(labels);
    return sp;
}

Q min_positive_radius(const FiniteMetricSpace& space, std::size_t p) {
    if (space.size() < 2) throw DomainError("R(p) needs at least two points");
    if (p >= space.size()) throw DomainError("point index out of range");
    std::optional<Q> best;
    for (std::size_t q = 0; q < space.size(); ++q)
        if (q != p && (!best || space.d(p, q) < *best)) best = space.d(p, q);
    return *best;
}

std::vector<std::size_t> metric_segment(const FiniteMetricSpace& space, std::size_t p, std::size_t q) {
    std::vector<std::size_t> out;
    for (std::size_t z = 0; z < space.size(); ++z)
        if (space.d(p, z) + space.d(z, q) == space.d(p, q)) out.push_back(z);
    return out;
}

SpacePtr line_space(const QVec& coords, std::string name) {
    const std::size_t n = coords.size();
    QMat d(n, QVec(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = to_string(coords[i]);
        for (std::size_t j = 0; j < n; ++j) d[i][j] = qabs(coords[i] - coords[j]);
    }
    return make_space(std::move(name), std::move(d), std::move(labels));
}

SpacePtr integer_space(std::size_t n) {
    QVec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<long>(i);
    return line_space(c, "integers");
}

SpacePtr discrete_space(std::size_t n) {
    QMat d(n, QVec(n, Q(1)));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    return make_space("discrete", std::move(d));
}

std::vector<long> MetricModel::sequence_indices(std::size_t N) const {
    std::vector<long> out;
    for (std::size_t r = base_is_p1 ? 0 : 1; r < N; ++r) out.push_back(index_of_row(r));
    return out;
}

SpacePtr truncate(const MetricModel& model, std::size_t N) {
    if (N < 2) throw DomainError("truncation needs N >= 2");
    QMat d(N, QVec(N));
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < N; ++i) {
        labels[i] = model.row_label ? model.row_label(i) : std::string();
        for (std::size_t j = i + 1; j < N; ++j) {
            d[i][j] = model.row_rule(i, j);
            d[j][i] = model.row_rule(j, i);
        }
    }
    return make_space(model.name + "@" + std::to_string(N), std::move(d), std::move(labels));
}

}  // namespace lipwb

namespace lipwb {

SpacePtr repoint(const FiniteMetricSpace& space, std::size_t b) {
    const std::size_t n = space.size();
    if (b >= n) throw DomainError("new base out of range");
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[b]);
    QMat d(n, QVec(n));
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = space.label(perm[i]);
        for (std::size_t j = 0; j < n; ++j) d[i][j] = space.d(perm[i], perm[j]);
    }
    return make_space(space.name + "^" + space.label(b), std::move(d), std::move(labels));
}

}  // namespace lipwb

namespace lipwb {

SpacePtr subspace(const FiniteMetricSpace& space, const std::vector<std::size_t>& rows, std::string name) {
    if (rows.empty()) throw DomainError("subspace needs at least one point");
    std::vector<bool> seen(space.size(), false);
    for (auto r : rows) {
        if (r >= space.size()) throw DomainError("subspace row out of range");
        if (seen[r]) throw DomainError("subspace rows must be distinct");
        seen[r] = true;
    }
    QMat d(rows.size(), QVec(rows.size()));
    std::vector<std::string> labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        labels[i] = space.label(rows[i]);
        for (std::size_t j = 0; j < rows.size(); ++j) d[i][j] = space.d(rows[i], rows[j]);
    }
    if (name.empty()) name = space.name + "|sub";
    return make_space(std::move(name), std::move(d), std::move(labels));
}

}  // namespace lipwb

namespace lipwb {

SpacePtr random_metric(std::mt19937_64& rng, std::size_t n) {
    if (n < 1) throw DomainError("random metric needs at least one point");
    QMat d(n, QVec(n, Q(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Q w(static_cast<long>(1 + rng() % 9), static_cast<long>(1 + rng() % 4));
            w.canonicalize();
            d[i][j] = d[j][i] = w;
        }
    // shortest-path closure
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return make_space("random" + std::to_string(n), std::move(d));
}

}  // namespace lipwb
