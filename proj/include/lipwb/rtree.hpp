#pragma once

#include "lipwb/embeddings.hpp"

#include <array>
#include <random>
#include <tuple>

namespace lipwb {

struct TreeEdge {
    std::size_t u, v;
    Q length;
};

struct WeightedTree {
    std::size_t vertices = 0;
    std::vector<TreeEdge> edges;
    std::size_t base = 0;
};

// Throws StructuralError on a cycle, a disconnected graph, a bad endpoint or
// a non-positive length.
void check_tree(const WeightedTree& t);

// Path-length metric; the tree base becomes row 0, other vertices keep their order.
SpacePtr tree_metric(const WeightedTree& t);
// Row of each vertex in tree_metric(t).
std::vector<std::size_t> tree_rows(const WeightedTree& t);

struct FourPointResult {
    bool passed = true;
    std::array<std::size_t, 4> witness{};  // (p,q,r,s): d(p,q)+d(r,s) > both other sums
    std::size_t failing_subsets = 0;
};
// Lexicographically first violating ordered quadruple.
FourPointResult four_point_check(const FiniteMetricSpace& sp);

std::vector<std::size_t> branching_points(const WeightedTree& t);

struct AlignedSearch {
    std::optional<std::vector<std::size_t>> sequence;
    bool exhaustive = true;
    std::size_t threshold = 0;
};
// Exhaustive lexicographic search when the space has at most `exhaustive_limit`
// points, greedy extension from each start otherwise.
AlignedSearch find_aligned(const FiniteMetricSpace& sp, std::size_t k, std::size_t exhaustive_limit = 12);

struct TreePipelineResult {
    int which = 0;                // 1: many components at a hub, 2: long aligned path
    std::optional<std::size_t> hub;  // vertex, case 1
    std::vector<std::size_t> path;   // vertices, case 2
    std::vector<std::size_t> points, partners;  // rows in the tree space
    Family family;
    VerificationReport report;
};

// A vertex whose complement has at least `component_threshold` components
// stands in for one with infinitely many.
TreePipelineResult tree_c0_pipeline(const WeightedTree& t, std::size_t component_threshold = 4,
                                    const std::optional<Battery>& battery = std::nullopt);

// generators
WeightedTree star_tree(std::size_t leaves, const Q& length = Q(1));
WeightedTree path_tree(std::size_t n, const Q& length = Q(1));
// spine of `spine` vertices, `legs` pendant leaves on each
WeightedTree caterpillar_tree(std::size_t spine, std::size_t legs);
// hub plus `arms` paths of `arm_length` unit edges
WeightedTree subdivided_star(std::size_t arms, std::size_t arm_length);
// parent of vertex i uniform in [0, i); lengths p/q with p in 1..8, q in 1..4
WeightedTree random_tree(std::mt19937_64& rng, std::size_t n);

// 4-cycle with unit sides and diagonals 2 (not a tree metric)
SpacePtr four_cycle_space();

}  // namespace lipwb
