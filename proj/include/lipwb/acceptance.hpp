#pragma once

#include <string>
#include <vector>

namespace lipwb {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = true;
    std::vector<std::string> details;        // one line per sub-check
    std::vector<std::string> supplementary;  // limit readings and other context, not graded
};

// Tolerances are pinned here; everything except criterion 11 is exact.
inline constexpr double kAnalyticHorizon = 1e6;
inline constexpr std::size_t kAnalyticResolution = 200000;
inline constexpr double kAnalyticHorizonTol = 1e-5;
inline constexpr double kAnalyticSlopeTol = 1e-12;

std::vector<CriterionResult> run_acceptance();
CriterionResult run_criterion(int id);

}  // namespace lipwb
