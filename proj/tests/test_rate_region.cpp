#include <doctest.h>

#include <cmath>
#include <limits>

#include "gic/rate_region.hpp"
#include "gic/upper_bounds.hpp"

using namespace gic;

namespace {
double boundary_ceiling(const std::vector<RegionConstraint>& cons, double r2) {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& c : cons) v = std::min(v, c.r1_ceiling(r2));
    return v;
}
}  // namespace

TEST_CASE("classic region constraints") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    auto cons = etw_region(ch);
    CHECK(cons.size() == 7);
    CHECK(cons[0].r1_ceiling(0.0) == doctest::Approx(0.5 * std::log2(8.0)));
    // sum-rate face agrees with the sum bound
    double sum = etw_sum_bound(ch).value;
    double best_sum = std::numeric_limits<double>::infinity();
    for (const auto& c : cons)
        if (c.c1 == 1.0 && c.c2 == 1.0) best_sum = std::min(best_sum, c.v);
    CHECK(best_sum == doctest::Approx(sum));
    CHECK_THROWS_AS(etw_region(ChannelParams(5.0, 5.0, 1.4, 1.4)), std::domain_error);
}

TEST_CASE("boundary trace is monotone and symmetric for a symmetric channel") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    RegionBoundary b = intersect_and_trace(etw_region(ch), 200);
    CHECK(b.points.size() == 201);
    for (size_t i = 1; i < b.points.size(); ++i) {
        CHECK(b.points[i].second > b.points[i - 1].second);
        CHECK(b.points[i].first <= b.points[i - 1].first + 1e-12);
    }
    // corners swap under user exchange
    CHECK(b.points.front().first == doctest::Approx(b.points.back().second));
    CHECK(b.points.front().second == doctest::Approx(0.0));
}

TEST_CASE("refining the resolution keeps shared grid points") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    auto cons = etw_region(ch);
    RegionBoundary coarse = intersect_and_trace(cons, 100);
    RegionBoundary fine = intersect_and_trace(cons, 200);
    for (size_t i = 0; i < coarse.points.size(); ++i) {
        CHECK(fine.points[2 * i].second == doctest::Approx(coarse.points[i].second));
        CHECK(fine.points[2 * i].first ==
              doctest::Approx(coarse.points[i].first).epsilon(1e-6));
    }
}

TEST_CASE("tracing requires a bounded rate box") {
    std::vector<RegionConstraint> cons;
    RegionConstraint only_sum;
    only_sum.c1 = 1.0;
    only_sum.c2 = 1.0;
    only_sum.v = 2.0;
    cons.push_back(only_sum);
    CHECK_THROWS_AS(intersect_and_trace(cons, 10), std::invalid_argument);
    CHECK_THROWS_AS(intersect_and_trace({}, 10), std::invalid_argument);
}

TEST_CASE("time-division inner boundary") {
    RegionBoundary b = tdm_inner_region(7.0, 100);
    CHECK(b.points.size() == 101);
    CHECK(b.points.front().first == doctest::Approx(0.5 * std::log2(8.0)));
    CHECK(b.points.front().second == doctest::Approx(0.0));
    CHECK(b.points.back().second == doctest::Approx(0.5 * std::log2(8.0)));
    CHECK(b.points.back().first == doctest::Approx(0.0));
}

TEST_CASE("EPI ceilings are monotone in the conditioned rate") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    GenieParams unit;
    auto cons = thm9_constraints(ch, unit, {});
    REQUIRE(cons.size() == 2);
    for (const auto& c : cons) {
        double prev = c.r1_ceiling(0.0);
        for (double r2 = 0.1; r2 <= 1.2; r2 += 0.1) {
            double cur = c.r1_ceiling(r2);
            CHECK(cur <= prev + 1e-9);
            prev = cur;
        }
    }
}

TEST_CASE("weighted constraints appear for feasible genie parameters") {
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    GenieParams k = thm5_b_step_kappa(std::sqrt(0.2));
    auto cons = thm10_constraint(ch, k);
    CHECK(cons.size() == 2);
    CHECK(cons[0].c1 == 1.0);
    CHECK(cons[0].c2 == 2.0);
    CHECK(cons[1].c1 == 2.0);
    CHECK(cons[1].c2 == 1.0);
    CHECK(cons[0].v == doctest::Approx(cons[1].v));  // symmetric channel
}

TEST_CASE("minimized region assemblies trace without throwing") {
    SearchOptions opts;
    opts.grid_points_per_dim = 5;
    ChannelParams ch = ChannelParams::symmetric(7.0, std::sqrt(0.2));
    auto ten = thm10_region_minimized(ch, opts);
    RegionBoundary b10 = intersect_and_trace(ten, 50);
    auto nine = thm9_region_minimized(ch, {}, opts);
    for (const auto& c : etw_region(ch)) nine.push_back(c);
    RegionBoundary b9 = intersect_and_trace(nine, 50);
    // both stay inside the single-user box
    double r1max = 0.5 * std::log2(8.0);
    for (const auto& [r1, r2] : b10.points) CHECK(r1 <= r1max + 1e-9);
    for (const auto& [r1, r2] : b9.points) CHECK(r1 <= r1max + 1e-9);
}

TEST_CASE("constraint ceilings for the linear form") {
    RegionConstraint c;
    c.c1 = 1.0;
    c.c2 = 2.0;
    c.v = 3.0;
    CHECK(c.r1_ceiling(1.0) == doctest::Approx(1.0));
    c.c1 = 0.0;
    c.c2 = 1.0;
    c.v = 2.0;
    CHECK(std::isinf(c.r1_ceiling(1.5)));
    CHECK(c.r1_ceiling(2.5) == -std::numeric_limits<double>::infinity());
}
