#pragma once

#include "lipwb/metric.hpp"

#include <utility>

namespace lipwb {

struct LipschitzFunction {
    SpacePtr space;
    QVec values;

    LipschitzFunction() = default;
    // throws DomainError unless values.size() == n_points and values[0] == 0
    LipschitzFunction(SpacePtr sp, QVec vals);
    static LipschitzFunction zero(SpacePtr sp);

    std::size_t size() const { return values.size(); }
    const Q& operator()(std::size_t i) const { return values[i]; }
    bool is_zero() const;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

struct AttainmentReport {
    Q norm;
    std::vector<IndexPair> strong_pairs;  // ordered, positive slope first
    QVec pointwise_sup;
    QVec pointwise_defect;
};

// (f(q) - f(p)) / d(p,q)
Q slope(const LipschitzFunction& f, std::size_t p, std::size_t q);
Q lip_norm(const LipschitzFunction& f);
Q pointwise_sup(const LipschitzFunction& f, std::size_t p);
AttainmentReport attainment_report(const LipschitzFunction& f);

LipschitzFunction combine(const std::vector<LipschitzFunction>& family, const QVec& coeffs);
LipschitzFunction add(const LipschitzFunction& f, const LipschitzFunction& g);
LipschitzFunction scale(const Q& a, const LipschitzFunction& f);

}  // namespace lipwb
