#pragma once

#include "lipwb/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace lipwb {

// Pointed finite metric space. Row 0 is always the base point.
struct FiniteMetricSpace {
    std::string name;
    QMat dist;
    std::vector<std::string> labels;

    std::size_t size() const { return dist.size(); }
    const Q& d(std::size_t i, std::size_t j) const { return dist[i][j]; }
    std::string label(std::size_t i) const;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

struct Violation {
    std::string axiom;  // diagonal | positivity | symmetry | triangle
    std::vector<std::size_t> witness;
    QVec values;
};

struct ValidationReport {
    bool passed = true;
    std::vector<Violation> violations;
};

// Violations are listed per axiom in lexicographic witness order, at most
// `cap` triangle witnesses. Triangle witness (i,j,k), i<k, means
// d(i,k) > d(i,j) + d(j,k); values are those three distances.
ValidationReport validate(const QMat& dist, std::size_t cap = 64);
ValidationReport validate(const FiniteMetricSpace& space, std::size_t cap = 64);

// Validates and wraps; throws ModelDefinitionError carrying the first witness.
SpacePtr make_space(std::string name, QMat dist, std::vector<std::string> labels = {});

Q min_positive_radius(const FiniteMetricSpace& space, std::size_t p);

// {z : d(p,z) + d(z,q) = d(p,q)}
std::vector<std::size_t> metric_segment(const FiniteMetricSpace& space, std::size_t p, std::size_t q);

// Points on a line, base at row 0 (the first coordinate is the base).
SpacePtr line_space(const QVec& coords, std::string name = "line");
// 0, 1, ..., n-1 on the real line.
SpacePtr integer_space(std::size_t n);
SpacePtr discrete_space(std::size_t n);
// Same points with row b as the new base: rows 0 and b trade places.
SpacePtr repoint(const FiniteMetricSpace& space, std::size_t b);
// Shortest-path closure of random weights p/q, p in 1..9, q in 1..4.
SpacePtr random_metric(std::mt19937_64& rng, std::size_t n);
// Rows in the given order; rows[0] becomes the base.
SpacePtr subspace(const FiniteMetricSpace& space, const std::vector<std::size_t>& rows, std::string name = "");

// Closed-form tail data of a countable model. Indices are model indices.
struct TailLimits {
    std::function<Q(long)> L_n;    // lim_m d(p_n, p_m)
    std::optional<Q> L;            // lim_n L(n)
    std::function<Q(long)> psi;    // lim_m phi(n,m), phi = d - L
    std::optional<Q> phi_liminf;   // liminf of phi over pairs
    std::optional<Q> origin_limit; // lim_n d(p_n, 0) for models with a separate origin
    bool bounded = true;
    bool excess_bounded = false;   // sup |d(p_n,p_m) - d(p_n,0) - d(p_m,0)| < inf
    bool monotone_tails = false;   // |d(p_n,p_m) - L(n)| non-increasing in m
};

struct MetricModel {
    std::string name;
    std::map<std::string, Q> params;
    // true: row r holds p_{r+1}, so the base point is p_1.
    // false: row 0 is a separate origin and row k holds the k-th point.
    bool base_is_p1 = false;
    // distance between rows (already mapped), rows >= 0
    std::function<Q(std::size_t, std::size_t)> row_rule;
    std::function<std::string(std::size_t)> row_label;
    TailLimits limits;
    // dmqr44 only: d(p_n,p_m) = d(p_n,0) + d(p_m,0) - eps(max(n,m))
    std::function<Q(long)> eps;

    long index_of_row(std::size_t r) const { return base_is_p1 ? static_cast<long>(r) + 1 : static_cast<long>(r); }
    std::size_t row_of(long k) const { return base_is_p1 ? static_cast<std::size_t>(k - 1) : static_cast<std::size_t>(k); }
    // model indices of the sequence p_n present in a truncation with N rows
    std::vector<long> sequence_indices(std::size_t N) const;
    // d(p_n, p_m) on model indices
    Q d_index(long n, long m) const { return row_rule(row_of(n), row_of(m)); }
};

// First N rows of the model, validated.
SpacePtr truncate(const MetricModel& model, std::size_t N);

const std::vector<std::string>& catalog_names();
MetricModel catalog(const std::string& name, const std::map<std::string, Q>& params = {});

// d(i,j) = |4^i - 4^j|, i >= 1, base x_1. Unbounded; used by the main pipeline.
MetricModel pow4_model();

}  // namespace lipwb
