#pragma once

#include "gic/types.hpp"

namespace gic {

struct HkPoint {
    double a_star = 0.0;  // power-split fraction in [0,1]
    double rate = 0.0;    // bits per channel use
    bool regime_ok = false;  // P^{-1/3} < g^2 < 1
};

double r_tdm(double P);
double r_tin(double P, double g);

// The max-min objective of the time-shared HK special case, evaluated at split a.
double hk_objective(double P, double g, double a);

HkPoint hk_a_star(double P, double g);
double hk_sum(double P, double g);

// The objective at the fixed split a = |g|^3 (min over both branches).
double hk_lower_fixed_a(double P, double g);

double r_shk(double P, double g);
double underline_r(double P, double g);

}  // namespace gic
