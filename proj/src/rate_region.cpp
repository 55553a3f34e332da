#include "gic/rate_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "gic/core.hpp"
#include "gic/upper_bounds.hpp"

namespace gic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double entropy_r(double v) { return gaussian_entropy(v, Kind::Real); }

struct Thm9Terms {
    double e_fwd = 0.0;   // entropy block of the R1-ceiling orientation
    double e_rev = 0.0;   // entropy block of the R2-ceiling orientation
    double sw1_sq = 0.0, sw2_sq = 0.0;
    bool ok_fwd = false, ok_rev = false;
};

// Entropy blocks of the EPI-based region bound. Only the W-side of kappa enters.
Thm9Terms thm9_terms(const ChannelParams& ch, const GenieParams& k) {
    Thm9Terms out;
    DerivedNoise d = derive_noise(ch, k);
    double g12 = ch.g12(), g21 = ch.g21();
    bool base = d.var_v_w1 >= g12 * d.var_z_minus_w2 - kClampTol &&
                d.var_v_w2 >= g21 * d.var_z_minus_w1 - kClampTol;
    out.sw1_sq = k.sigma_w1 * k.sigma_w1;
    out.sw2_sq = k.sigma_w2 * k.sigma_w2;
    out.ok_fwd = base && k.sigma_w2 <= 1.0;
    out.ok_rev = base && k.sigma_w1 <= 1.0;
    if (d.var_z_minus_w1 <= kClampTol || d.var_z_minus_w2 <= kClampTol) {
        out.ok_fwd = out.ok_rev = false;
        return out;
    }
    if (!out.ok_fwd && !out.ok_rev) return out;
    CovTable t = gic_covariances(ch, k);
    double vt_w1 = std::max(d.var_v_w1 - g12 * d.var_z_minus_w2, 0.0);
    double vt_w2 = std::max(d.var_v_w2 - g21 * d.var_z_minus_w1, 0.0);
    double cv_y1 = conditional_variance(t.var_y1, t.var_u1, t.cov_y1_u1);
    double cv_y2 = conditional_variance(t.var_y2, t.var_u2, t.cov_y2_u2);
    double cv_m1 = conditional_variance(g12 * t.var_y2 + vt_w1, t.var_u2,
                                        ch.h12 * t.cov_y2_u2);
    double cv_m2 = conditional_variance(g21 * t.var_y1 + vt_w2, t.var_u1,
                                        ch.h21 * t.cov_y1_u1);
    if (cv_y1 <= 0.0 || cv_y2 <= 0.0 || cv_m1 <= 0.0 || cv_m2 <= 0.0) {
        out.ok_fwd = out.ok_rev = false;
        return out;
    }
    double h_u1 = entropy_r(t.var_u1);
    double h_u2 = entropy_r(t.var_u2);
    double h_y1_u1 = entropy_r(cv_y1);
    double h_y2_u2 = entropy_r(cv_y2);
    double h_mix1 = entropy_r(cv_m1);
    double h_mix2 = entropy_r(cv_m2);
    double h_wz1 = entropy_r(d.var_z_minus_w1);
    double h_wz2 = entropy_r(d.var_z_minus_w2);
    double shared = -h_mix1 + h_y1_u1 - h_wz1 - h_mix2 + h_y2_u2 - h_wz2;
    out.e_fwd = h_u1 + shared;
    out.e_rev = h_u2 + shared;
    return out;
}

// EPI log term: 1/2 log2(2 pi e A) with A = S 2^{-2R} - 1 + sw^2 (real mode);
// +inf means the constraint is vacuous at that rate.
double epi_term(double S, double sw_sq, double r, bool complex_epi) {
    if (!complex_epi) {
        double arg = S * std::exp2(-2.0 * r) - 1.0 + sw_sq;
        if (arg <= 0.0) return kInf;
        return 0.5 * std::log2(kTwoPiE * arg);
    }
    double arg = S * std::exp2(-r) - 1.0 + sw_sq;
    if (arg <= 0.0) return kInf;
    return std::log2(0.5 * kTwoPiE * arg);
}

// invert a strictly decreasing rate bound g(R1) >= R2 by bisection
double invert_decreasing(const std::function<double(double)>& g, double r2, double hi) {
    if (g(0.0) < r2) return -kInf;
    double lo = 0.0;
    while (g(hi) >= r2) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) return kInf;
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        double mid = 0.5 * (lo + hi);
        (g(mid) >= r2 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double RegionConstraint::r1_ceiling(double r2) const {
    if (kind == Kind::Implicit) return ceiling(r2);
    if (c1 > 0.0) return (v - c2 * r2) / c1;
    return c2 * r2 <= v + 1e-12 ? kInf : -kInf;
}

std::vector<RegionConstraint> etw_region(const ChannelParams& ch) {
    if (!ch.weak()) throw std::domain_error("etw_region: weak interference required");
    GenieParams unit;
    CovTable t = gic_covariances(ch, unit);
    double pl = prelog(ch.kind);
    double i_y1_cond = pl * std::log2(1.0 + ch.p1);
    double i_y2_cond = pl * std::log2(1.0 + ch.p2);
    double i_y1 = pl * std::log2(1.0 + ch.p1 / (ch.g12() * ch.p2 + 1.0));
    double i_y2 = pl * std::log2(1.0 + ch.p2 / (ch.g21() * ch.p1 + 1.0));
    double i_ys1 = pl * std::log2((t.var_y1 * t.var_s1 - t.cov_y1_s1 * t.cov_y1_s1) /
                                  t.var_y1_given_x1);
    double i_ys2 = pl * std::log2((t.var_y2 * t.var_s2 - t.cov_y2_s2 * t.cov_y2_s2) /
                                  t.var_y2_given_x2);
    auto lin = [&](double c1, double c2, double v) {
        RegionConstraint c;
        c.kind = RegionConstraint::Kind::LinearWeighted;
        c.c1 = c1; c.c2 = c2; c.v = v;
        c.source = BoundId::Etw;
        c.kappa = unit;
        return c;
    };
    return {
        lin(1, 0, i_y1_cond),
        lin(0, 1, i_y2_cond),
        lin(1, 1, i_y1_cond + i_y2),
        lin(1, 1, i_y1 + i_y2_cond),
        lin(1, 1, i_ys1 + i_ys2),
        lin(2, 1, i_y1_cond + i_y1 + i_ys2),
        lin(1, 2, i_ys1 + i_y2_cond + i_y2),
    };
}

std::vector<RegionConstraint> thm9_constraints(const ChannelParams& ch, const GenieParams& k,
                                               const std::vector<double>& /*r2_grid*/,
                                               bool complex_epi) {
    Thm9Terms tt = thm9_terms(ch, k);
    double s_fwd = ch.p2 + ch.g21() * ch.p1 + 1.0;
    double s_rev = ch.p1 + ch.g12() * ch.p2 + 1.0;
    std::vector<RegionConstraint> out;
    if (tt.ok_fwd) {
        RegionConstraint c;
        c.kind = RegionConstraint::Kind::Implicit;
        c.source = BoundId::Thm10;  // region family tag
        c.kappa = k;
        double e = tt.e_fwd, sw = tt.sw2_sq;
        c.ceiling = [=](double r2) { return e + epi_term(s_fwd, sw, r2, complex_epi) - r2; };
        out.push_back(std::move(c));
    }
    if (tt.ok_rev) {
        RegionConstraint c;
        c.kind = RegionConstraint::Kind::Implicit;
        c.source = BoundId::Thm10;
        c.kappa = k;
        double e = tt.e_rev, sw = tt.sw1_sq;
        auto g = [=](double r1) { return e + epi_term(s_rev, sw, r1, complex_epi) - r1; };
        double hi = prelog(ch.kind) * std::log2(1.0 + ch.p1) + 1.0;
        c.ceiling = [=](double r2) { return invert_decreasing(g, r2, hi); };
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RegionConstraint> thm10_constraint(const ChannelParams& ch, const GenieParams& k) {
    std::vector<RegionConstraint> out;
    BoundResult fwd = thm10_value(ch, k);
    if (fwd.feasible) {
        RegionConstraint c;
        c.c1 = 1; c.c2 = 2; c.v = fwd.value;
        c.source = BoundId::Thm10;
        c.kappa = k;
        out.push_back(c);
    }
    BoundResult rev = thm10_value(ch.swapped(), k.swapped());
    if (rev.feasible) {
        RegionConstraint c;
        c.c1 = 2; c.c2 = 1; c.v = rev.value;
        c.source = BoundId::Thm10;
        c.kappa = k.swapped();
        out.push_back(c);
    }
    return out;
}

std::vector<RegionConstraint> thm9_region_minimized(const ChannelParams& ch,
                                                    const std::vector<double>& r2_grid,
                                                    const SearchOptions& opts) {
    // precompute entropy blocks on a W-side kappa grid, then take the pointwise min
    int n = std::max(2, std::min(opts.grid_points_per_dim, 9));
    auto fwd = std::make_shared<std::vector<std::pair<double, double>>>();  // (E, sw2^2)
    auto rev = std::make_shared<std::vector<std::pair<double, double>>>();  // (E, sw1^2)
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n; ++i1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int i3 = 0; i3 < n; ++i3) {
                    GenieParams k;
                    k.sigma_w1 = i0 / double(n - 1);
                    k.sigma_w2 = i1 / double(n - 1);
                    k.rho_w1 = -1.0 + 2.0 * i2 / double(n - 1);
                    k.rho_w2 = -1.0 + 2.0 * i3 / double(n - 1);
                    Thm9Terms tt = thm9_terms(ch, k);
                    if (tt.ok_fwd) fwd->push_back({tt.e_fwd, tt.sw2_sq});
                    if (tt.ok_rev) rev->push_back({tt.e_rev, tt.sw1_sq});
                }
    double s_fwd = ch.p2 + ch.g21() * ch.p1 + 1.0;
    double s_rev = ch.p1 + ch.g12() * ch.p2 + 1.0;
    std::vector<RegionConstraint> out;
    if (!fwd->empty()) {
        RegionConstraint c;
        c.kind = RegionConstraint::Kind::Implicit;
        c.source = BoundId::Thm10;
        c.ceiling = [=](double r2) {
            double best = kInf;
            for (const auto& [e, sw] : *fwd)
                best = std::min(best, e + epi_term(s_fwd, sw, r2, false) - r2);
            return best;
        };
        out.push_back(std::move(c));
    }
    if (!rev->empty()) {
        double hi = prelog(ch.kind) * std::log2(1.0 + ch.p1) + 1.0;
        RegionConstraint c;
        c.kind = RegionConstraint::Kind::Implicit;
        c.source = BoundId::Thm10;
        auto g = [=](double r1) {
            double best = kInf;
            for (const auto& [e, sw] : *rev)
                best = std::min(best, e + epi_term(s_rev, sw, r1, false) - r1);
            return best;
        };
        c.ceiling = [=](double r2) { return invert_decreasing(g, r2, hi); };
        out.push_back(std::move(c));
    }
    (void)r2_grid;
    return out;
}

std::vector<RegionConstraint> thm10_region_minimized(const ChannelParams& ch,
                                                     const SearchOptions& opts) {
    double pl = prelog(ch.kind);
    std::vector<RegionConstraint> out;
    auto lin = [&](double c1, double c2, double v, BoundId src) {
        RegionConstraint c;
        c.c1 = c1; c.c2 = c2; c.v = v;
        c.source = src;
        out.push_back(c);
    };
    lin(1, 0, pl * std::log2(1.0 + ch.p1), BoundId::Etw);
    lin(0, 1, pl * std::log2(1.0 + ch.p2), BoundId::Etw);
    BoundResult f = minimize_bound(BoundId::Thm10, ch, opts);
    if (f.feasible) lin(1, 2, f.value, BoundId::Thm10);
    BoundResult r = minimize_bound(BoundId::Thm10, ch.swapped(), opts);
    if (r.feasible) lin(2, 1, r.value, BoundId::Thm10);
    BoundResult s5 = minimize_bound(BoundId::Thm5, ch, opts);
    if (s5.feasible) lin(1, 1, s5.value, BoundId::Thm5);
    BoundResult s5s = minimize_bound(BoundId::Thm5Swapped, ch, opts);
    if (s5s.feasible) lin(1, 1, s5s.value, BoundId::Thm5Swapped);
    return out;
}

RegionBoundary intersect_and_trace(const std::vector<RegionConstraint>& constraints,
                                   int resolution) {
    if (constraints.empty()) throw std::invalid_argument("intersect_and_trace: no constraints");
    double r2max = kInf;
    for (const auto& c : constraints) {
        if (c.kind == RegionConstraint::Kind::LinearWeighted && c.c1 == 0.0 && c.c2 > 0.0)
            r2max = std::min(r2max, c.v / c.c2);
    }
    if (!std::isfinite(r2max))
        throw std::invalid_argument("intersect_and_trace: missing single-user R2 constraint");
    RegionBoundary b;
    b.resolution = r2max / resolution;
    double prev = kInf;
    for (int i = 0; i <= resolution; ++i) {
        double r2 = r2max * i / resolution;
        double r1 = kInf;
        for (const auto& c : constraints) r1 = std::min(r1, c.r1_ceiling(r2));
        r1 = std::min(r1, prev);  // monotone trace
        prev = r1;
        b.points.push_back({std::max(r1, 0.0), r2});
    }
    return b;
}

RegionBoundary tdm_inner_region(double P, int resolution) {
    if (!(P > 0.0)) throw std::domain_error("tdm_inner_region: P must be positive");
    RegionBoundary b;
    b.resolution = 1.0 / resolution;
    for (int i = 0; i <= resolution; ++i) {
        double lam = 1.0 - double(i) / resolution;
        double r1 = lam > 0.0 ? lam * 0.5 * std::log2(1.0 + P / lam) : 0.0;
        double lb = 1.0 - lam;
        double r2 = lb > 0.0 ? lb * 0.5 * std::log2(1.0 + P / lb) : 0.0;
        b.points.push_back({r1, r2});
    }
    return b;
}

}  // namespace gic
