#pragma once

#include "lipwb/rational.hpp"

#include <utility>

namespace lipwb {

struct PiecewiseLinearFunction {
    QVec xs;  // strictly increasing
    QVec ys;
    bool extend_left = false;   // constant beyond xs.front()
    bool extend_right = false;  // constant beyond xs.back()
    Q base = 0;                 // coordinate where the value must be 0

    PiecewiseLinearFunction() = default;
    // throws DomainError on bad shape or nonzero value at base
    PiecewiseLinearFunction(QVec x, QVec y, bool ext_left = false, bool ext_right = false, Q base_coord = 0);

    std::size_t segments() const { return xs.size() < 2 ? 0 : xs.size() - 1; }
    Q segment_slope(std::size_t i) const { return (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]); }
    bool in_domain(const Q& x) const;
    Q operator()(const Q& x) const;
};

struct AttainmentFlags {
    Q norm;
    bool sna = false;
    std::vector<std::size_t> max_segments;
    QVec pna_points;                          // breakpoints with pointwise sup = norm
    std::vector<std::pair<Q, Q>> pna_intervals;  // closed max-slope segments
    std::vector<std::pair<Q, int>> der_points;   // breakpoint, direction (+1 right, -1 left)
    QVec ldira_points;                        // breakpoints adjacent to a max-slope segment
};

Q pl_norm(const PiecewiseLinearFunction& f);
Q pl_pointwise_sup(const PiecewiseLinearFunction& f, const Q& x);
AttainmentFlags classify(const PiecewiseLinearFunction& f);

// Tent number n >= 1 on [0,1]: support ]2^-(n^2), 2^-((n-1)^2)[.
PiecewiseLinearFunction gen_tent(unsigned n);
Q tent_peak(unsigned n);
Q tent_height(unsigned n);
// sum a_n tent_n on [0,1]
PiecewiseLinearFunction tent_sum(const QVec& a);
// Level-K truncation of the cone function; requires 0 < eps < 1 - eta, 0 < eta < 1.
PiecewiseLinearFunction gen_zigzag(const Q& eps, const Q& eta, unsigned K);
struct ZigzagPoints {
    std::vector<std::pair<Q, Q>> p, q;  // p[0] = p_1 = (1,0)
};
ZigzagPoints zigzag_points(const Q& eps, const Q& eta, unsigned K);
// Odd function on [-1,1] with constant extension +-1/2, level K.
PiecewiseLinearFunction gen_example62(unsigned K);
struct Example62Points {
    std::vector<std::pair<Q, Q>> s, t;  // t[0] = t_1 = (1, 1/2)
};
Example62Points example62_points(unsigned K);
// even extension of f on [0,b] to [-b,b]
PiecewiseLinearFunction symmetrize(const PiecewiseLinearFunction& f);

}  // namespace lipwb
