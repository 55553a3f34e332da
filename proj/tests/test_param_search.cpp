#include <doctest.h>

#include <cmath>

#include "gic/param_search.hpp"
#include "gic/upper_bounds.hpp"

using namespace gic;

TEST_CASE("search result dominates the warm starts") {
    SearchOptions opts;
    for (double g2 : {0.2, 0.5}) {
        double g = std::sqrt(g2);
        ChannelParams ch = ChannelParams::symmetric(100.0, g);
        BoundResult r = minimize_bound(BoundId::Thm5, ch, opts);
        CHECK(r.feasible);
        CHECK(r.value <= thm5_bound(ch, thm5_a_step_kappa(g)).value + 1e-9);
        CHECK(r.value <= thm5_bound(ch, thm5_b_step_kappa(g)).value + 1e-9);
        CHECK(r.achieving_params.has_value());
        // reported kappa reproduces the reported value
        CHECK(thm5_bound(ch, *r.achieving_params).value == doctest::Approx(r.value));
    }
}

TEST_CASE("search is deterministic") {
    SearchOptions opts;
    opts.grid_points_per_dim = 5;
    ChannelParams ch = ChannelParams::symmetric(40.0, std::sqrt(0.35));
    BoundResult a = minimize_bound(BoundId::Thm3, ch, opts);
    BoundResult b = minimize_bound(BoundId::Thm3, ch, opts);
    CHECK(a.value == b.value);
    CHECK(a.achieving_params->sigma_w1 == b.achieving_params->sigma_w1);
    CHECK(a.achieving_params->rho_w2 == b.achieving_params->rho_w2);
}

TEST_CASE("asymmetric channels search all eight coordinates") {
    SearchOptions opts;
    opts.grid_points_per_dim = 5;
    opts.restarts = 4;
    ChannelParams ch(20.0, 35.0, 0.4, 0.6);
    BoundResult r = minimize_bound(BoundId::Thm3, ch, opts);
    CHECK(r.feasible);
    GenieParams k = *r.achieving_params;
    CHECK(thm3_bound(ch, k).value == doctest::Approx(r.value));
}

TEST_CASE("swapped-orientation bound matches swapping the channel") {
    SearchOptions opts;
    opts.grid_points_per_dim = 5;
    ChannelParams ch(20.0, 35.0, 0.4, 0.6);
    BoundResult direct = minimize_bound(BoundId::Thm5Swapped, ch, opts);
    BoundResult via_swap = minimize_bound(BoundId::Thm5, ch.swapped(), opts);
    CHECK(direct.value == doctest::Approx(via_swap.value).epsilon(1e-6));
}

TEST_CASE("tight search tolerance refines the grid value") {
    SearchOptions coarse;
    coarse.refine_iters = 0;
    coarse.restarts = 1;
    SearchOptions fine;
    ChannelParams ch = ChannelParams::symmetric(60.0, std::sqrt(0.45));
    CHECK(minimize_bound(BoundId::Thm4, ch, fine).value <=
          minimize_bound(BoundId::Thm4, ch, coarse).value + 1e-12);
}
