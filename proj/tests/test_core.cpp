#include <doctest.h>

#include <cmath>

#include "gic/core.hpp"

using namespace gic;

TEST_CASE("gaussian entropy in bits") {
    CHECK(gaussian_entropy(1.0, Kind::Real) == doctest::Approx(0.5 * std::log2(kTwoPiE)));
    CHECK(gaussian_entropy(2.0, Kind::Real) - gaussian_entropy(1.0, Kind::Real) ==
          doctest::Approx(0.5));
    CHECK(gaussian_entropy(1.0, Kind::Complex) ==
          doctest::Approx(std::log2(0.5 * kTwoPiE)));
    CHECK(gaussian_entropy(3.0, Kind::Complex) - gaussian_entropy(1.0, Kind::Complex) ==
          doctest::Approx(std::log2(3.0)));
}

TEST_CASE("conditional variance clamps") {
    CHECK(conditional_variance(2.0, 4.0, 0.0) == doctest::Approx(2.0));
    CHECK(conditional_variance(1.0, 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(conditional_variance(1.0, 1.0, 1.0 + 1e-13) >= 0.0);
}

TEST_CASE("derived noise variances") {
    ChannelParams ch(10.0, 10.0, 0.5, 0.5);
    GenieParams k;
    k.sigma_n1 = 0.6;
    k.rho_n1 = 0.3;
    k.sigma_w2 = 0.8;
    k.rho_w2 = 0.4;
    DerivedNoise d = derive_noise(ch, k);
    CHECK(d.var_v_n1 == doctest::Approx(1.0 - 0.09));
    CHECK(d.var_z_minus_w2 == doctest::Approx(1.0 + 0.64 - 2.0 * 0.4 * 0.8));
    double zw = d.var_z_minus_w2;
    CHECK(d.var_v_w2 ==
          doctest::Approx(0.64 - std::pow(0.4 * 0.8 - 0.64, 2) / zw));
    CHECK(d.var_z1_minus_hinv_n1 ==
          doctest::Approx(1.0 + 0.36 / 0.25 - 2.0 * 0.3 * 0.6 / 0.5));
}

TEST_CASE("perfectly correlated unit genie noise degenerates cleanly") {
    ChannelParams ch(5.0, 5.0, 0.4, 0.4);
    GenieParams k;
    k.sigma_w1 = 1.0;
    k.rho_w1 = 1.0;  // W = Z, so Z - W collapses
    DerivedNoise d = derive_noise(ch, k);
    CHECK(d.var_z_minus_w1 == doctest::Approx(0.0));
    CHECK(d.var_v_w1 == doctest::Approx(1.0));
}

TEST_CASE("zero cross gain marks inverse-gain fields as NaN") {
    ChannelParams ch(5.0, 5.0, 0.4, 0.0);
    GenieParams k;
    DerivedNoise d = derive_noise(ch, k);
    CHECK(std::isnan(d.var_z1_minus_hinv_n1));
}

TEST_CASE("surrogate covariances") {
    ChannelParams ch(10.0, 20.0, 0.5, 0.7);
    GenieParams k;
    k.sigma_n1 = 0.6;
    k.rho_n1 = 0.3;
    k.sigma_w1 = 0.9;
    k.rho_w1 = -0.2;
    CovTable t = gic_covariances(ch, k);
    CHECK(t.var_y1 == doctest::Approx(10.0 + 0.25 * 20.0 + 1.0));
    CHECK(t.var_y2 == doctest::Approx(20.0 + 0.49 * 10.0 + 1.0));
    CHECK(t.var_s1 == doctest::Approx(0.49 * 10.0 + 0.36));
    CHECK(t.var_u1 == doctest::Approx(0.25 * 20.0 + 0.81));
    CHECK(t.cov_y1_s1 == doctest::Approx(0.7 * 10.0 + 0.3 * 0.6));
    CHECK(t.cov_y1_u1 == doctest::Approx(0.25 * 20.0 - 0.2 * 0.9));
    CHECK(t.var_y1_given_x1 == doctest::Approx(0.25 * 20.0 + 1.0));
}

TEST_CASE("channel params validate and swap") {
    CHECK_THROWS_AS(ChannelParams(0.0, 1.0, 0.5, 0.5), std::domain_error);
    ChannelParams ch(1.0, 2.0, 0.3, 0.8);
    ChannelParams sw = ch.swapped();
    CHECK(sw.p1 == 2.0);
    CHECK(sw.h12 == 0.8);
    CHECK(ChannelParams::symmetric(4.0, 0.5).symmetric_channel());
    CHECK_FALSE(ch.symmetric_channel());
}
