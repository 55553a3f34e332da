#include "gic/core.hpp"

#include <cmath>
#include <limits>

namespace gic {

double gaussian_entropy(double variance, Kind kind) {
    if (!(variance > 0.0)) throw std::domain_error("gaussian_entropy: variance must be positive");
    if (kind == Kind::Real) return 0.5 * std::log2(kTwoPiE * variance);
    return std::log2(0.5 * kTwoPiE * variance);  // pi*e*variance
}

double conditional_variance(double var_a, double var_b, double cov_ab) {
    if (!(var_b > 0.0)) throw std::domain_error("conditional_variance: var_b must be positive");
    double v = var_a - cov_ab * cov_ab / var_b;
    if (v < 0.0) {
        if (v < -kClampTol * (1.0 + std::fabs(var_a)))
            throw std::domain_error("conditional_variance: covariance inconsistent");
        v = 0.0;
    }
    return v;
}

namespace {

// sigma^2_{W|Z-W} via the Schur complement of (W, Z-W); degenerate Z-W keeps sigma_W^2.
double var_w_given_zmw(double sw, double rw) {
    double s2 = sw * sw;
    double zmw = 1.0 + s2 - 2.0 * rw * sw;
    if (zmw < 1e-15) return s2;
    double v = s2 - (rw * sw - s2) * (rw * sw - s2) / zmw;
    return v < 0.0 ? 0.0 : v;
}

}  // namespace

DerivedNoise derive_noise(const ChannelParams& ch, const GenieParams& k) {
    if (!k.valid()) throw std::domain_error("derive_noise: genie params out of range");
    DerivedNoise d;
    d.var_v_n1 = 1.0 - k.rho_n1 * k.rho_n1;
    d.var_v_n2 = 1.0 - k.rho_n2 * k.rho_n2;
    d.var_z_minus_w1 = 1.0 + k.sigma_w1 * k.sigma_w1 - 2.0 * k.rho_w1 * k.sigma_w1;
    d.var_z_minus_w2 = 1.0 + k.sigma_w2 * k.sigma_w2 - 2.0 * k.rho_w2 * k.sigma_w2;
    d.var_v_w1 = var_w_given_zmw(k.sigma_w1, k.rho_w1);
    d.var_v_w2 = var_w_given_zmw(k.sigma_w2, k.rho_w2);
    if (ch.h21 != 0.0) {
        double s = k.sigma_n1;
        d.var_z1_minus_hinv_n1 = 1.0 + s * s / (ch.h21 * ch.h21) - 2.0 * k.rho_n1 * s / ch.h21;
    } else {
        d.var_z1_minus_hinv_n1 = std::numeric_limits<double>::quiet_NaN();
    }
    if (ch.h12 != 0.0) {
        double s = k.sigma_n2;
        d.var_z2_minus_hinv_n2 = 1.0 + s * s / (ch.h12 * ch.h12) - 2.0 * k.rho_n2 * s / ch.h12;
    } else {
        d.var_z2_minus_hinv_n2 = std::numeric_limits<double>::quiet_NaN();
    }
    return d;
}

CovTable gic_covariances(const ChannelParams& ch, const GenieParams& k) {
    if (!k.valid()) throw std::domain_error("gic_covariances: genie params out of range");
    CovTable t{};
    double g12 = ch.g12(), g21 = ch.g21();
    t.var_x1 = ch.p1;
    t.var_x2 = ch.p2;
    t.var_y1 = ch.p1 + g12 * ch.p2 + 1.0;
    t.var_y2 = ch.p2 + g21 * ch.p1 + 1.0;
    t.var_s1 = g21 * ch.p1 + k.sigma_n1 * k.sigma_n1;
    t.var_s2 = g12 * ch.p2 + k.sigma_n2 * k.sigma_n2;
    t.var_u1 = g12 * ch.p2 + k.sigma_w1 * k.sigma_w1;
    t.var_u2 = g21 * ch.p1 + k.sigma_w2 * k.sigma_w2;
    t.cov_x1_y1 = ch.p1;
    t.cov_x2_y2 = ch.p2;
    t.cov_x1_s1 = ch.h21 * ch.p1;
    t.cov_x2_s2 = ch.h12 * ch.p2;
    t.cov_y1_s1 = ch.h21 * ch.p1 + k.rho_n1 * k.sigma_n1;
    t.cov_y2_s2 = ch.h12 * ch.p2 + k.rho_n2 * k.sigma_n2;
    t.cov_y1_u1 = g12 * ch.p2 + k.rho_w1 * k.sigma_w1;
    t.cov_y2_u2 = g21 * ch.p1 + k.rho_w2 * k.sigma_w2;
    t.cov_y1_x2 = ch.h12 * ch.p2;
    t.cov_y2_x1 = ch.h21 * ch.p1;
    t.var_y1_given_x1 = g12 * ch.p2 + 1.0;
    t.var_y2_given_x2 = g21 * ch.p1 + 1.0;
    return t;
}

}  // namespace gic
