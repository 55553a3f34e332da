#pragma once

#include <string>
#include <vector>

#include "gic/types.hpp"

namespace gic {

struct SearchOptions {
    int grid_points_per_dim = 9;
    int refine_iters = 200;
    double tol_bits = 1e-7;
    unsigned seed = 0;
    int restarts = 8;
};

struct Feasibility {
    bool ok = true;
    std::vector<std::string> violated;
};

Feasibility feasibility(BoundId id, const ChannelParams& ch, const GenieParams& k);

// Constrained minimization over kappa: coarse grid, then Nelder-Mead refinement with
// infeasible points scored +inf. Deterministic for fixed options.
BoundResult minimize_bound(BoundId id, const ChannelParams& ch, const SearchOptions& opts);

}  // namespace gic
