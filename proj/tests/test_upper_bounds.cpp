#include <doctest.h>

#include <cmath>
#include <limits>

#include "gic/param_search.hpp"
#include "gic/upper_bounds.hpp"

using namespace gic;

TEST_CASE("symmetric anchor rate") {
    double P = 100.0, g = std::sqrt(0.5);
    CHECK(r_sym_star(P, g) == doctest::Approx(0.5 * std::log2(g * P + (P + 1.0) / g)));
}

TEST_CASE("simplified bounds sit above the anchor") {
    for (double g2 : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        double g = std::sqrt(g2);
        for (double P : {10.0, 100.0}) {
            CHECK(thm6_simplified(P, g) >= r_sym_star(P, g) - 1e-12);
            CHECK(cor1_rbar(P, g) >= r_sym_star(P, g) - 1e-12);
            CHECK(kramer_sym(P, g) >= r_sym_star(P, g) - 1e-12);
        }
        CHECK(cor1_gamma(g) >= 0.0);
    }
}

TEST_CASE("warm-start value identities") {
    for (double g2 : {0.1, 0.3, 0.7}) {
        double g = std::sqrt(g2);
        ChannelParams ch = ChannelParams::symmetric(100.0, g);
        double vb = thm5_bound(ch, thm5_b_step_kappa(g)).value;
        CHECK(vb == doctest::Approx(r_sym_star(100.0, g) +
                                    0.5 * std::log2((4.0 * g2 + 1.0) / (4.0 * g)))
                        .epsilon(1e-10));
    }
}

TEST_CASE("classic sum bound") {
    ChannelParams ch = ChannelParams::symmetric(100.0, std::sqrt(0.3));
    BoundResult b = etw_sum_bound(ch);
    CHECK(b.feasible);
    // the genie-free cut dominates at vanishing interference
    ChannelParams quiet = ChannelParams::symmetric(100.0, 1e-8);
    CHECK(etw_sum_bound(quiet).value == doctest::Approx(std::log2(101.0)).epsilon(1e-6));
    ChannelParams strong(10.0, 10.0, 1.5, 1.5);
    CHECK_FALSE(etw_sum_bound(strong).feasible);
}

TEST_CASE("infeasible genie parameters poison the bound value") {
    ChannelParams ch = ChannelParams::symmetric(50.0, std::sqrt(0.4));
    GenieParams k;  // unit noise, zero correlation
    k.sigma_n1 = k.sigma_n2 = 0.01;
    k.rho_n1 = k.rho_n2 = 0.999;  // tiny var_v_n violates the hybrid conditions
    BoundResult b = thm5_bound(ch, k);
    CHECK_FALSE(b.feasible);
    CHECK(std::isinf(b.value));
    Feasibility f = feasibility(BoundId::Thm5, ch, k);
    CHECK_FALSE(f.ok);
    CHECK_FALSE(f.violated.empty());
}

TEST_CASE("best upper dominates every closed form it considers") {
    SearchOptions opts;
    opts.grid_points_per_dim = 7;
    ChannelParams ch = ChannelParams::symmetric(100.0, std::sqrt(0.3));
    BoundResult best = best_upper(ch, opts);
    CHECK(best.feasible);
    CHECK(best.value <= etw_sum_bound(ch).value + 1e-12);
    CHECK(best.value <= kramer_sym(100.0, std::sqrt(0.3)) + 1e-12);
    CHECK(best.value <= thm6_simplified(100.0, std::sqrt(0.3)) + 1e-12);
    CHECK(best.value <= cor1_rbar(100.0, std::sqrt(0.3)) + 1e-12);
}

TEST_CASE("weighted-rate bound shares the hybrid feasibility") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    GenieParams k = thm5_b_step_kappa(std::sqrt(0.2));
    BoundResult r = thm10_value(ch, k);
    CHECK(r.feasible);
    CHECK(r.value > 0.0);
}
