#include "gic/upper_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gic/core.hpp"
#include "gic/param_search.hpp"

namespace gic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlack = 1e-12;

void require_gain(double g) {
    if (g == 0.0) throw std::domain_error("cross gain must be nonzero");
}

BoundResult infeasible_result(BoundId id, const ChannelParams& ch, const GenieParams& k) {
    BoundResult r;
    r.value = kInf;
    r.feasible = false;
    r.achieving_params = k;
    r.bound_id = id;
    r.channel = ch;
    return r;
}

BoundResult make_result(BoundId id, const ChannelParams& ch, const GenieParams& k, double value) {
    BoundResult r;
    r.value = value;
    r.feasible = std::isfinite(value);
    r.achieving_params = k;
    r.bound_id = id;
    r.channel = ch;
    return r;
}

// The shared R_0 block of the hybrid bounds (sum of four logs, base 2).
double r0_block(const ChannelParams& ch, const GenieParams& k, const DerivedNoise& d) {
    double g12 = ch.g12(), g21 = ch.g21();
    double sn1 = k.sigma_n1 * k.sigma_n1;
    double sw2 = k.sigma_w2 * k.sigma_w2;
    return std::log2((g21 * ch.p1 + sn1) / (g21 * ch.p1 + d.var_v_w2)) +
           std::log2((g21 * ch.p1 + sw2) / (g21 * ch.p1 + 1.0)) +
           std::log2((ch.p1 + g12 * ch.p2 + 1.0) / sn1) +
           std::log2((ch.p2 + g21 * ch.p1 + 1.0) / d.var_z_minus_w2);
}

// log numerator shared by the hybrid bounds: Var(Y1) - Cov(Y1,S1)^2/Var(S1).
double y1_given_s1_term(const ChannelParams& ch, const GenieParams& k) {
    double g12 = ch.g12(), g21 = ch.g21();
    double vs1 = g21 * ch.p1 + k.sigma_n1 * k.sigma_n1;
    double c = ch.h21 * ch.p1 + k.rho_n1 * k.sigma_n1;
    return ch.p1 + g12 * ch.p2 + 1.0 - c * c / vs1;
}

double y2_given_u2_term(const ChannelParams& ch, const GenieParams& k) {
    double g21 = ch.g21();
    double vu2 = g21 * ch.p1 + k.sigma_w2 * k.sigma_w2;
    double c = g21 * ch.p1 + k.rho_w2 * k.sigma_w2;
    return ch.p2 + g21 * ch.p1 + 1.0 - c * c / vu2;
}

// (rho_n1 sigma_n1 - sigma_n1^2/h21)^2 / Var(S1) correction of the N-side denominators
double n_side_correction(const ChannelParams& ch, const GenieParams& k) {
    double vs1 = ch.g21() * ch.p1 + k.sigma_n1 * k.sigma_n1;
    double c = k.rho_n1 * k.sigma_n1 - k.sigma_n1 * k.sigma_n1 / ch.h21;
    return c * c / vs1;
}

double w_side_correction(const ChannelParams& ch, const GenieParams& k) {
    double vu2 = ch.g21() * ch.p1 + k.sigma_w2 * k.sigma_w2;
    double c = ch.h12 * k.rho_w2 * k.sigma_w2 - ch.h12 * k.sigma_w2 * k.sigma_w2;
    return c * c / vu2;
}

}  // namespace

double r_sym_star(double P, double g) {
    if (!(P > 0.0)) throw std::domain_error("r_sym_star: P must be positive");
    require_gain(g);
    double ag = std::fabs(g);
    return 0.5 * std::log2(ag * P + (P + 1.0) / ag);
}

double kramer_sym(double P, double g) {
    if (!(P > 0.0)) throw std::domain_error("kramer_sym: P must be positive");
    require_gain(g);
    double g2 = g * g, ag = std::fabs(g);
    double root = std::sqrt((1.0 + g2) * (1.0 + g2) + 4.0 * g2 * (1.0 + g2) * P);
    return r_sym_star(P, g) +
           0.5 * std::log2((g2 - 1.0 + root) / (ag * (1.0 - g2 + root)));
}

double thm6_simplified(double P, double g) {
    if (!(P > 0.0)) throw std::domain_error("thm6_simplified: P must be positive");
    require_gain(g);
    double g2 = g * g, ag = std::fabs(g);
    double sn2 = g2 <= 0.5 ? 4.0 * g2 * (1.0 - g2) : 1.0;
    double branch_a = 0.25 * std::log2((g2 * P + sn2) / (g2 * P + 1.0)) +
                      0.25 * std::log2(4.0 * g2 * g2 / (sn2 * (4.0 * g2 - sn2)));
    double branch_b = 0.5 * std::log2((4.0 * g2 + 1.0) / (4.0 * ag));
    return r_sym_star(P, g) + std::min(branch_a, branch_b);
}

double cor1_gamma(double g) {
    require_gain(g);
    double g2 = g * g, ag = std::fabs(g);
    if (g2 <= 0.405) return 0.5 * std::log2((4.0 * g2 + 1.0) / (4.0 * ag));
    return 0.5 * std::log2(2.0 * g2 / std::sqrt(4.0 * g2 - 1.0));
}

double cor1_rbar(double P, double g) {
    return r_sym_star(P, g) + cor1_gamma(g);
}

BoundResult etw_sum_bound(const ChannelParams& ch) {
    GenieParams unit;  // unit-variance genie noise, uncorrelated
    if (!ch.weak()) return infeasible_result(BoundId::Etw, ch, unit);
    double pl = prelog(ch.kind);
    CovTable t = gic_covariances(ch, unit);
    double c7c = pl * (std::log2(1.0 + ch.p1) +
                       std::log2(1.0 + ch.p2 / (ch.g21() * ch.p1 + 1.0)));
    double c7d = pl * (std::log2(1.0 + ch.p2) +
                       std::log2(1.0 + ch.p1 / (ch.g12() * ch.p2 + 1.0)));
    // I(X1;Y1,S1) via the 2x2 log-det ratio det K_{Y,S} / det K_{Y,S|X}
    double det1 = t.var_y1 * t.var_s1 - t.cov_y1_s1 * t.cov_y1_s1;
    double det1c = t.var_y1_given_x1 * 1.0;  // unit genie noise, rho = 0
    double det2 = t.var_y2 * t.var_s2 - t.cov_y2_s2 * t.cov_y2_s2;
    double det2c = t.var_y2_given_x2 * 1.0;
    double c7e = pl * (std::log2(det1 / det1c) + std::log2(det2 / det2c));
    return make_result(BoundId::Etw, ch, unit, std::min({c7c, c7d, c7e}));
}

Feasibility feasibility(BoundId id, const ChannelParams& ch, const GenieParams& k) {
    Feasibility f;
    f.ok = true;
    auto fail = [&](const std::string& s) {
        f.ok = false;
        f.violated.push_back(s);
    };
    DerivedNoise d = derive_noise(ch, k);
    double g12 = ch.g12(), g21 = ch.g21();
    double sn1 = k.sigma_n1 * k.sigma_n1;
    double sw2 = k.sigma_w2 * k.sigma_w2;
    switch (id) {
        case BoundId::Thm3:
            if (!(d.var_v_w1 >= g12 * d.var_z_minus_w2 - kSlack))
                fail("var_v_w1 >= |h12|^2 var_z_minus_w2");
            if (!(d.var_v_w2 >= g21 * d.var_z_minus_w1 - kSlack))
                fail("var_v_w2 >= |h21|^2 var_z_minus_w1");
            break;
        case BoundId::Thm4:
            if (!(d.var_v_w2 >= std::min(sn1, sw2) - kSlack))
                fail("var_v_w2 >= min(sigma_n1^2, sigma_w2^2)");
            if (!(d.var_v_n1 >= d.var_z1_minus_hinv_n1 - kSlack))
                fail("var_v_n1 >= var_z1_minus_hinv_n1");
            if (!(g12 * d.var_z_minus_w2 <= 1.0 + kSlack))
                fail("|h12|^2 var_z_minus_w2 <= 1");
            break;
        case BoundId::Thm5:
            if (!(d.var_v_w2 >= std::min(sn1, sw2) - kSlack))
                fail("var_v_w2 >= min(sigma_n1^2, sigma_w2^2)");
            if (!(d.var_v_n1 >= g12 * d.var_z_minus_w2 - kSlack))
                fail("var_v_n1 >= |h12|^2 var_z_minus_w2");
            if (!(d.var_z1_minus_hinv_n1 <= 1.0 + kSlack))
                fail("var_z1_minus_hinv_n1 <= 1");
            break;
        case BoundId::Thm5Swapped:
            return feasibility(BoundId::Thm5, ch.swapped(), k.swapped());
        case BoundId::Thm10:
            if (!(d.var_v_w2 >= std::min(sn1, sw2) - kSlack))
                fail("var_v_w2 >= min(sigma_n1^2, sigma_w2^2)");
            if (!(d.var_v_n1 >= g12 * d.var_z_minus_w2 - kSlack))
                fail("var_v_n1 >= |h12|^2 var_z_minus_w2");
            break;
        default:
            break;
    }
    return f;
}

BoundResult thm3_bound(const ChannelParams& ch, const GenieParams& k) {
    if (!feasibility(BoundId::Thm3, ch, k).ok) return infeasible_result(BoundId::Thm3, ch, k);
    double g12 = ch.g12(), g21 = ch.g21();
    DerivedNoise d = derive_noise(ch, k);
    double sw1 = k.sigma_w1 * k.sigma_w1, sw2 = k.sigma_w2 * k.sigma_w2;
    double vu1 = g12 * ch.p2 + sw1, vu2 = g21 * ch.p1 + sw2;
    double cy1u1 = g12 * ch.p2 + k.rho_w1 * k.sigma_w1;
    double cy2u2 = g21 * ch.p1 + k.rho_w2 * k.sigma_w2;
    double cw1 = ch.h21 * (k.rho_w1 * k.sigma_w1 - sw1);
    double cw2 = ch.h12 * (k.rho_w2 * k.sigma_w2 - sw2);
    double t1 = std::log2(1.0 + ch.p1 / (g12 * ch.p2 + 1.0));
    double t2 = std::log2(vu1 / d.var_z_minus_w1);
    double t3 = std::log2((ch.p1 + g12 * ch.p2 + 1.0 - cy1u1 * cy1u1 / vu1) /
                          (g21 * ch.p1 + d.var_v_w2 - cw1 * cw1 / vu1));
    double t4 = std::log2(1.0 + ch.p2 / (g21 * ch.p1 + 1.0));
    double t5 = std::log2(vu2 / d.var_z_minus_w2);
    double t6 = std::log2((ch.p2 + g21 * ch.p1 + 1.0 - cy2u2 * cy2u2 / vu2) /
                          (g12 * ch.p2 + d.var_v_w1 - cw2 * cw2 / vu2));
    double value = 0.5 * prelog(ch.kind) * (t1 + t2 + t3 + t4 + t5 + t6);
    return make_result(BoundId::Thm3, ch, k, value);
}

BoundResult thm4_bound(const ChannelParams& ch, const GenieParams& k) {
    if (!feasibility(BoundId::Thm4, ch, k).ok) return infeasible_result(BoundId::Thm4, ch, k);
    double g12 = ch.g12();
    DerivedNoise d = derive_noise(ch, k);
    double t1 = std::log2(y1_given_s1_term(ch, k) /
                          (g12 * ch.p2 + d.var_v_n1 - n_side_correction(ch, k)));
    double t2 = std::log2(y2_given_u2_term(ch, k) /
                          (g12 * ch.p2 + 1.0 - w_side_correction(ch, k)));
    double value = 0.5 * prelog(ch.kind) * (t1 + t2 + r0_block(ch, k, d));
    return make_result(BoundId::Thm4, ch, k, value);
}

BoundResult thm5_bound(const ChannelParams& ch, const GenieParams& k) {
    if (!feasibility(BoundId::Thm5, ch, k).ok) return infeasible_result(BoundId::Thm5, ch, k);
    double g12 = ch.g12();
    DerivedNoise d = derive_noise(ch, k);
    double t1 = std::log2(y1_given_s1_term(ch, k) /
                          (g12 * ch.p2 + 1.0 - n_side_correction(ch, k)));
    double t2 = std::log2(y2_given_u2_term(ch, k) /
                          (g12 * ch.p2 + d.var_v_n1 - w_side_correction(ch, k)));
    double value = 0.5 * prelog(ch.kind) * (t1 + t2 + r0_block(ch, k, d));
    return make_result(BoundId::Thm5, ch, k, value);
}

BoundResult thm5_swapped_bound(const ChannelParams& ch, const GenieParams& k) {
    BoundResult r = thm5_bound(ch.swapped(), k.swapped());
    r.bound_id = BoundId::Thm5Swapped;
    r.channel = ch;
    r.achieving_params = k;
    return r;
}

BoundResult thm10_value(const ChannelParams& ch, const GenieParams& k) {
    if (!feasibility(BoundId::Thm10, ch, k).ok) return infeasible_result(BoundId::Thm10, ch, k);
    double g12 = ch.g12(), g21 = ch.g21();
    DerivedNoise d = derive_noise(ch, k);
    double sn1 = k.sigma_n1 * k.sigma_n1, sw2 = k.sigma_w2 * k.sigma_w2;
    double t1 = std::log2((g21 * ch.p1 + sn1) / (g21 * ch.p1 + d.var_v_w2));
    double t2 = std::log2((g21 * ch.p1 + sw2) / (g21 * ch.p1 + 1.0));
    double t3 = std::log2(y2_given_u2_term(ch, k) /
                          (g12 * ch.p2 + d.var_v_n1 - w_side_correction(ch, k)));
    double t4 = std::log2(y1_given_s1_term(ch, k) / sn1);
    double t5 = std::log2((ch.p2 + g21 * ch.p1 + 1.0) / d.var_z_minus_w2);
    double value = prelog(ch.kind) * (t1 + t2 + t3 + t4 + t5);
    BoundResult r = make_result(BoundId::Thm10, ch, k, value);
    return r;
}

GenieParams thm5_a_step_kappa(double g, double sigma_n1_sq) {
    double ag = std::fabs(g), g2 = g * g;
    GenieParams k;
    k.sigma_n1 = std::sqrt(sigma_n1_sq);
    k.rho_n1 = k.sigma_n1 / (2.0 * ag);
    double inner = std::max(g2 + k.rho_n1 * k.rho_n1 - 1.0, 0.0);
    k.rho_w2 = std::sqrt(inner) / ag;
    k.sigma_w2 = k.rho_w2;  // sigma_w2^2 = rho_w2^2
    k.sigma_n2 = k.sigma_n1; k.rho_n2 = k.rho_n1;
    k.sigma_w1 = k.sigma_w2; k.rho_w1 = k.rho_w2;
    return k;
}

GenieParams thm5_a_step_kappa(double g) {
    double g2 = g * g;
    return thm5_a_step_kappa(g, g2 <= 0.5 ? 4.0 * g2 * (1.0 - g2) : 1.0);
}

GenieParams thm5_b_step_kappa(double g) {
    double ag = std::fabs(g), g2 = g * g;
    GenieParams k;
    double sn2 = 4.0 * g2 / (4.0 * g2 + 1.0);
    k.sigma_n1 = std::sqrt(sn2);
    k.rho_n1 = k.sigma_n1 / (2.0 * ag);
    k.sigma_w2 = 1.0;
    k.rho_w2 = sn2 / (8.0 * g2 * g2) - 1.0 / (2.0 * g2) + 1.0;
    k.sigma_n2 = k.sigma_n1; k.rho_n2 = k.rho_n1;
    k.sigma_w1 = k.sigma_w2; k.rho_w1 = k.rho_w2;
    return k;
}

BoundResult best_upper(const ChannelParams& ch, const SearchOptions& opts) {
    BoundResult best;
    best.value = kInf;
    best.feasible = false;
    best.channel = ch;
    auto consider = [&](const BoundResult& r) {
        if (r.feasible && r.value < best.value) best = r;
    };
    auto consider_value = [&](BoundId id, double v) {
        if (std::isfinite(v) && v < best.value) {
            BoundResult r = make_result(id, ch, GenieParams{}, v);
            r.achieving_params.reset();
            best = r;
        }
    };
    consider(etw_sum_bound(ch));
    if (ch.symmetric_channel() && ch.g12() <= 1.0) {
        double P = ch.p1, g = ch.h12;
        consider_value(BoundId::KramerSym, kramer_sym(P, g));
        consider_value(BoundId::Thm6Simplified, thm6_simplified(P, g));
        consider_value(BoundId::Cor1RBar, cor1_rbar(P, g));
    }
    consider(minimize_bound(BoundId::Thm3, ch, opts));
    consider(minimize_bound(BoundId::Thm4, ch, opts));
    consider(minimize_bound(BoundId::Thm5, ch, opts));
    consider(minimize_bound(BoundId::Thm5Swapped, ch, opts));
    return best;
}

}  // namespace gic
