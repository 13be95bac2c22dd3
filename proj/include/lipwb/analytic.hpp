#pragma once

#include <cstddef>
#include <string>

namespace lipwb {

// Floating-point sampling of a smooth function on the real line. Not exact.
struct AnalyticReport {
    std::string function_id;
    std::size_t resolution = 0;
    double horizon = 0;
    double max_grid_slope = 0;   // over consecutive grid points on [-horizon, horizon]
    double slope_at_horizon = 0; // S(f, 0, horizon)
    double closed_form = 0;      // horizon / (horizon + 2)
    bool grid_ok = false;        // max_grid_slope <= 1 + 1e-12
    bool horizon_ok = false;     // |1 - S(f, 0, horizon)| <= 4 / horizon
};

// Only "x2-over-absx-plus-2", f(x) = x^2 / (|x| + 2), is known; other ids
// throw DomainError, as do non-positive resolution or horizon.
AnalyticReport sample_analytic(const std::string& function_id, std::size_t resolution, double horizon);

}  // namespace lipwb
