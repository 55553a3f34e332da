#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gic/param_search.hpp"
#include "gic/types.hpp"

namespace gic {

struct RegionConstraint {
    enum class Kind { LinearWeighted, Implicit };
    Kind kind = Kind::LinearWeighted;
    // LinearWeighted: c1*R1 + c2*R2 <= v
    double c1 = 0.0, c2 = 0.0, v = 0.0;
    // Implicit: R1 <= ceiling(R2), monotone nonincreasing in R2
    std::function<double(double)> ceiling;
    BoundId source = BoundId::Etw;
    std::optional<GenieParams> kappa;

    double r1_ceiling(double r2) const;
};

struct RegionBoundary {
    std::vector<std::pair<double, double>> points;  // (R1, R2), R2 increasing
    double resolution = 0.0;
};

std::vector<RegionConstraint> etw_region(const ChannelParams& ch);

// Implicit R1 <= f(R2) ceilings from the EPI-based region bound at a fixed kappa
// (both orientations; the swapped one is inverted numerically).
std::vector<RegionConstraint> thm9_constraints(const ChannelParams& ch, const GenieParams& k,
                                               const std::vector<double>& r2_grid,
                                               bool complex_epi = false);

// R1+2R2 and 2R1+R2 weighted constraints at a fixed kappa.
std::vector<RegionConstraint> thm10_constraint(const ChannelParams& ch, const GenieParams& k);

// kappa-minimized assemblies used for region tracing.
std::vector<RegionConstraint> thm9_region_minimized(const ChannelParams& ch,
                                                    const std::vector<double>& r2_grid,
                                                    const SearchOptions& opts);
std::vector<RegionConstraint> thm10_region_minimized(const ChannelParams& ch,
                                                     const SearchOptions& opts);

RegionBoundary intersect_and_trace(const std::vector<RegionConstraint>& constraints,
                                   int resolution);

RegionBoundary tdm_inner_region(double P, int resolution = 100);

}  // namespace gic
