#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace gic {

enum class Kind { Real, Complex };

// Per-dimension prelog of a Gaussian log term: 1/2 in real mode, 1 in complex mode.
inline double prelog(Kind kind) { return kind == Kind::Real ? 0.5 : 1.0; }

struct ChannelParams {
    double p1 = 1.0;
    double p2 = 1.0;
    double h12 = 0.5;
    double h21 = 0.5;
    Kind kind = Kind::Real;

    ChannelParams() = default;
    ChannelParams(double p1_, double p2_, double h12_, double h21_, Kind k = Kind::Real)
        : p1(p1_), p2(p2_), h12(h12_), h21(h21_), kind(k) {
        if (!(p1 > 0.0) || !(p2 > 0.0)) throw std::domain_error("powers must be positive");
    }

    static ChannelParams symmetric(double P, double g, Kind k = Kind::Real) {
        return ChannelParams(P, P, g, g, k);
    }

    double g12() const { return h12 * h12; }
    double g21() const { return h21 * h21; }
    bool weak() const { return g12() <= 1.0 && g21() <= 1.0; }
    bool symmetric_channel() const { return p1 == p2 && h12 == h21; }

    ChannelParams swapped() const { return ChannelParams(p2, p1, h21, h12, kind); }
};

// The genie parameter vector kappa: std-devs of the genie noises N_i, W_i and their
// correlations with the receiver noise Z_i.
struct GenieParams {
    double sigma_n1 = 1.0, sigma_n2 = 1.0, sigma_w1 = 1.0, sigma_w2 = 1.0;
    double rho_n1 = 0.0, rho_n2 = 0.0, rho_w1 = 0.0, rho_w2 = 0.0;

    bool valid() const {
        auto in01 = [](double s) { return s >= 0.0 && s <= 1.0; };
        auto corr = [](double r) { return std::fabs(r) <= 1.0; };
        return in01(sigma_n1) && in01(sigma_n2) && in01(sigma_w1) && in01(sigma_w2) &&
               corr(rho_n1) && corr(rho_n2) && corr(rho_w1) && corr(rho_w2);
    }

    GenieParams swapped() const {
        GenieParams s;
        s.sigma_n1 = sigma_n2; s.sigma_n2 = sigma_n1;
        s.sigma_w1 = sigma_w2; s.sigma_w2 = sigma_w1;
        s.rho_n1 = rho_n2; s.rho_n2 = rho_n1;
        s.rho_w1 = rho_w2; s.rho_w2 = rho_w1;
        return s;
    }
};

// Conditional variances every bound consumes. Fields depending on 1/h are NaN when the
// corresponding cross gain is zero; callers that need them must check.
struct DerivedNoise {
    double var_v_n1 = 0, var_v_n2 = 0;              // sigma^2_{Z_i|N_i} = 1 - rho^2
    double var_v_w1 = 0, var_v_w2 = 0;              // sigma^2_{W_i|Z_i-W_i}
    double var_z_minus_w1 = 0, var_z_minus_w2 = 0;  // 1 + s^2 - 2 rho s
    double var_z1_minus_hinv_n1 = 0;                // 1 + s^2/h21^2 - 2 rho s / h21
    double var_z2_minus_hinv_n2 = 0;                // index-swapped twin (uses h12)
};

enum class BoundId {
    Etw,
    KramerSym,
    Thm3,
    Thm4,
    Thm5,
    Thm5Swapped,
    Thm6Simplified,
    Cor1RBar,
    RSymStar,
    BestUpper,
    Thm10,  // region bound (R1 + 2R2); kept after the sum-rate ids
};

inline const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::Etw: return "etw";
        case BoundId::KramerSym: return "kramer";
        case BoundId::Thm3: return "thm3";
        case BoundId::Thm4: return "thm4";
        case BoundId::Thm5: return "thm5";
        case BoundId::Thm5Swapped: return "thm5_swapped";
        case BoundId::Thm6Simplified: return "thm6";
        case BoundId::Cor1RBar: return "cor1";
        case BoundId::RSymStar: return "r_sym_star";
        case BoundId::BestUpper: return "best_upper";
        case BoundId::Thm10: return "thm10";
    }
    return "?";
}

struct BoundResult {
    double value = 0.0;
    std::optional<GenieParams> achieving_params;
    bool feasible = true;
    BoundId bound_id = BoundId::BestUpper;
    ChannelParams channel;
};

}  // namespace gic
