#pragma once

#include "gic/types.hpp"

namespace gic {

struct SearchOptions;  // param_search.hpp

double r_sym_star(double P, double g);
double kramer_sym(double P, double g);
double thm6_simplified(double P, double g);

// gamma(g): the piecewise penalty of the simplified upper bound over R_sym*.
double cor1_gamma(double g);
double cor1_rbar(double P, double g);

BoundResult etw_sum_bound(const ChannelParams& ch);

BoundResult thm3_bound(const ChannelParams& ch, const GenieParams& k);
BoundResult thm4_bound(const ChannelParams& ch, const GenieParams& k);
BoundResult thm5_bound(const ChannelParams& ch, const GenieParams& k);
BoundResult thm5_swapped_bound(const ChannelParams& ch, const GenieParams& k);

// R1 + 2R2 value of the region bound sharing Thm5's machinery (no leading 1/2).
BoundResult thm10_value(const ChannelParams& ch, const GenieParams& k);

// Symmetric warm-start parameter choices for Thm5.
GenieParams thm5_a_step_kappa(double g);                    // default sigma_n1^2 rule
GenieParams thm5_a_step_kappa(double g, double sigma_n1_sq);
GenieParams thm5_b_step_kappa(double g);

BoundResult best_upper(const ChannelParams& ch, const SearchOptions& opts);

}  // namespace gic
