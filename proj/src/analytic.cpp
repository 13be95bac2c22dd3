#include "lipwb/analytic.hpp"

#include "lipwb/errors.hpp"

#include <algorithm>
#include <cmath>

namespace lipwb {

namespace {

double f(double x) { return x * x / (std::fabs(x) + 2); }

// (f(b) - f(a)) / (b - a); on one side of 0 this factors as
// (|a||b| + 2(|a| + |b|)) / ((|a| + 2)(|b| + 2)), which avoids cancellation.
double slope(double a, double b) {
    if ((a >= 0) == (b >= 0)) {
        double s = (a >= 0) ? 1.0 : -1.0;
        double u = std::fabs(a), v = std::fabs(b);
        return s * (u * v + 2 * (u + v)) / ((u + 2) * (v + 2));
    }
    return (f(b) - f(a)) / (b - a);
}

}  // namespace

AnalyticReport sample_analytic(const std::string& function_id, std::size_t resolution, double horizon) {
    if (function_id != "x2-over-absx-plus-2") throw DomainError("unknown analytic function '" + function_id + "'");
    if (resolution < 1 || !(horizon > 0)) throw DomainError("resolution and horizon must be positive");
    AnalyticReport r;
    r.function_id = function_id;
    r.resolution = resolution;
    r.horizon = horizon;
    const double step = 2 * horizon / static_cast<double>(resolution);
    double prev = -horizon;
    for (std::size_t i = 1; i <= resolution; ++i) {
        double x = i == resolution ? horizon : -horizon + step * static_cast<double>(i);
        r.max_grid_slope = std::max(r.max_grid_slope, std::fabs(slope(prev, x)));
        prev = x;
    }
    r.slope_at_horizon = f(horizon) / horizon;
    r.closed_form = horizon / (horizon + 2);
    r.grid_ok = r.max_grid_slope <= 1 + 1e-12;
    r.horizon_ok = std::fabs(1 - r.slope_at_horizon) <= 4 / horizon;
    return r;
}

}  // namespace lipwb
