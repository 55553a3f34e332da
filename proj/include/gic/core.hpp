#pragma once

#include "gic/types.hpp"

namespace gic {

inline constexpr double kTwoPiE = 17.079468445347132;  // 2*pi*e
inline constexpr double kClampTol = 1e-12;

// Differential entropy of a Gaussian in bits.
double gaussian_entropy(double variance, Kind kind);

// Schur complement var_a - |cov_ab|^2 / var_b, clamped at 0 from below.
double conditional_variance(double var_a, double var_b, double cov_ab);

DerivedNoise derive_noise(const ChannelParams& ch, const GenieParams& k);

// Second moments of the Gaussian surrogates. S_i = h_ji X_i + N_i is the own-signal
// genie observation; U_i = h_ij X_j + W_i is the change-of-interference signal.
struct CovTable {
    double var_x1, var_x2;
    double var_y1, var_y2;
    double var_s1, var_s2;
    double var_u1, var_u2;
    double cov_x1_y1, cov_x2_y2;
    double cov_x1_s1, cov_x2_s2;
    double cov_y1_s1, cov_y2_s2;
    double cov_y1_u1, cov_y2_u2;
    double cov_y1_x2, cov_y2_x1;        // Cov(Y_1, X_2) = h12 P2 etc.
    double var_y1_given_x1, var_y2_given_x2;  // |h12|^2 P2 + 1 etc.
};

CovTable gic_covariances(const ChannelParams& ch, const GenieParams& k);

}  // namespace gic
