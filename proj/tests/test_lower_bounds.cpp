#include <doctest.h>

#include <cmath>

#include "gic/lower_bounds.hpp"

using namespace gic;

TEST_CASE("baseline schemes") {
    CHECK(r_tdm(100.0) == doctest::Approx(0.5 * std::log2(201.0)));
    double P = 100.0, g = std::sqrt(0.3);
    CHECK(r_tin(P, g) == doctest::Approx(std::log2(1.0 + P / (0.3 * P + 1.0))));
}

TEST_CASE("split objective and its maximizer") {
    double P = 100.0, g = std::sqrt(0.4);
    HkPoint p = hk_a_star(P, g);
    CHECK(p.regime_ok);
    CHECK(p.a_star >= 0.0);
    CHECK(p.a_star <= 1.0);
    CHECK(p.rate == doctest::Approx(hk_objective(P, g, p.a_star)));
    // maximizer dominates a scatter of splits
    for (double a : {0.0, 0.05, 0.2, 0.5, 0.8, 1.0})
        CHECK(p.rate >= hk_objective(P, g, a) - 1e-9);
    CHECK(hk_sum(P, g) == doctest::Approx(p.rate));
}

TEST_CASE("fixed-split rate is dominated by the optimized one") {
    for (double g2 : {0.2, 0.4, 0.6, 0.9}) {
        for (double P : {30.0, 100.0, 1000.0}) {
            double g = std::sqrt(g2);
            CHECK(hk_sum(P, g) >= hk_lower_fixed_a(P, g) - 1e-9);
        }
    }
}

TEST_CASE("time division crosses the fixed-split rate near P = 23.24") {
    double P = 23.239;
    double g = std::pow(P, -1.0 / 6.0);
    CHECK(std::fabs(hk_lower_fixed_a(P, g) - r_tdm(P)) < 1e-3);
}

TEST_CASE("composite lower bound switches at P = 23.3") {
    double g = std::sqrt(0.4);
    CHECK(underline_r(20.0, g) == doctest::Approx(r_tdm(20.0)));
    double v = underline_r(100.0, g);
    CHECK(v == doctest::Approx(std::max(hk_lower_fixed_a(100.0, g), r_shk(100.0, g))));
}

TEST_CASE("simplified no-time-sharing rate") {
    double P = 100.0, g = std::sqrt(0.5);
    double expect = 0.5 * std::log2(1.0 + P + 0.5 * P) + 0.5 * std::log2(2.0 + 2.0) - 1.0;
    CHECK(r_shk(P, g) == doctest::Approx(expect));
}
