#pragma once

#include <string>
#include <vector>

#include "gic/types.hpp"

namespace gic {

struct CriterionResult {
    std::string name;
    int criterion = 0;  // 1-based index into the acceptance list
    double measured = 0.0;
    double limit = 0.0;
    bool pass = false;
    std::string detail;
};

// Runs the acceptance suite. tol_scale multiplies every numeric tolerance (0 forces
// exact comparisons); a nonempty `only` keeps entries whose name starts with it.
std::vector<CriterionResult> run_acceptance(double tol_scale = 1.0,
                                            const std::string& only = "");

}  // namespace gic
