#pragma once

#include <array>

#include "gic/types.hpp"

namespace gic {

// Covariance of the vector (Z, X+Z, U); Z independent of X and U.
struct GaussianTriple {
    std::array<std::array<double, 3>, 3> k{};

    static GaussianTriple from_parts(double var_z, double var_x, double var_u,
                                     double cov_xu);
    bool valid(double tol = 1e-10) const;
};

// Two-component 1-D Gaussian mixture for X.
struct MixtureSpec {
    double w1 = 1.0;             // weight of the first component, second gets 1 - w1
    double mu1 = 0.0, s1 = 1.0;  // component means and std-devs
    double mu2 = 0.0, s2 = 1.0;

    double mean() const;
    double variance() const;
    double pdf(double x) const;
};

struct ProbeResult {
    double gap = 0.0;  // right side minus left side, in bits
    bool converged = true;
};

// Residual between two algebraic routes of the conditional worst-noise identity for a
// Gaussian triple; analytically zero.
double lemma1_gap(const GaussianTriple& t);

// Quadrature probe of the inequality direction: X the given mixture, U = c X + G with
// G ~ N(0, var_g), Z ~ N(0, sigma_z^2); the Gaussian side uses the exact covariance.
ProbeResult lemma1_inequality_probe(const MixtureSpec& mix, double c, double var_g,
                                    double sigma_z, int points = 4001);

// Gaussian-instance gap of the conditional difference bound; Z and W may correlate,
// sigma_v^2 must dominate the variance of Z - W.
double lemma2_gap(double var_x, double var_y, double sigma_z, double sigma_w,
                  double cov_zw, double sigma_v);

// Quadrature probe of the unconditional worst-noise corollary for a mixture X;
// requires sigma_z >= sigma_w.
ProbeResult corollary7_gap(double sigma_w, double sigma_z, double cov_wz,
                           const MixtureSpec& mix, int points = 4001);

}  // namespace gic
