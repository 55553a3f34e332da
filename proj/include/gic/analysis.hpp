#pragma once

#include <functional>
#include <vector>

#include "gic/types.hpp"

namespace gic {

// squared-gain threshold between the moderate sub-regimes, (1 - sqrt(1/2))^2
inline constexpr double kModerateG2Min = 0.08578643762690485;

enum class Regime { Noisy, Moderate, WeakNonModerate, Strong };

struct RegimeLabel {
    Regime regime = Regime::Moderate;
    double alpha = 0.0;  // GDOF exponent, NaN when P <= 1
    double g2 = 0.0;
};

const char* regime_name(Regime r);

RegimeLabel classify(double P, double g);

struct DeltaGap {
    double delta = 0.0;    // cor1_rbar - underline_r
    double ceiling = 0.0;  // analytic upper bound on the gap
};

DeltaGap delta_gap(double P, double g);

double delta_inf(double g);

struct HighSnrResult {
    double r_inf = 0.0;        // asymptotic symmetric-rate characterization
    double ratio = 0.0;        // r_inf / (0.5 log2 P)
    double ratio_approx = 0.0; // piecewise affine-in-alpha approximation
    bool in_regime = false;    // P^{-1/3} <= g^2 <= 1
};

HighSnrResult high_snr_characterization(double P, double g);

struct PowerOffsetResult {
    std::vector<double> sequence;  // log2(P_n) - 2 R(P_n)
    double estimate = 0.0;         // extrapolated limit
    bool converged = false;        // last step <= 0.01 bits
};

// Richardson-style extrapolation of the power offset of a symmetric-rate evaluator.
PowerOffsetResult power_offset(const std::function<double(double)>& rate_of_p,
                               const std::vector<double>& p_list);

}  // namespace gic
