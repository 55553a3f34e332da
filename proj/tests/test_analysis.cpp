#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gic/analysis.hpp"
#include "gic/lower_bounds.hpp"
#include "gic/upper_bounds.hpp"

using namespace gic;

TEST_CASE("regime classification") {
    CHECK(classify(1000.0, std::sqrt(0.5)).regime == Regime::Moderate);
    CHECK(classify(100.0, std::sqrt(0.05)).regime == Regime::WeakNonModerate);
    CHECK(classify(100.0, 1.2).regime == Regime::Strong);
    CHECK(classify(20.0, 0.05).regime == Regime::Noisy);
    CHECK_THROWS_AS(classify(100.0, 0.0), std::domain_error);
    // alpha = 2/3 exactly when g^2 = P^{-1/3}
    double P = 1000.0;
    CHECK(classify(P, std::pow(P, -1.0 / 6.0)).alpha == doctest::Approx(2.0 / 3.0));
    CHECK(std::isnan(classify(0.5, 0.3).alpha));
}

TEST_CASE("asymptotic gap piecewise values") {
    CHECK(delta_inf(0.5) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(delta_inf(std::sqrt(0.5)) == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(delta_inf(std::sqrt(0.086)) == doctest::Approx(0.098).epsilon(6e-3));
    CHECK(delta_inf(std::sqrt(0.835)) == doctest::Approx(0.063).epsilon(1e-2));
    CHECK_THROWS_AS(delta_inf(0.0), std::domain_error);
    CHECK_THROWS_AS(delta_inf(1.2), std::domain_error);
    // near-continuity where the active pair of bounds changes smoothly
    CHECK(std::fabs(delta_inf(std::sqrt(0.405) - 1e-9) -
                    delta_inf(std::sqrt(0.405) + 1e-9)) < 1e-3);
    // global maximum sits at the lowest moderate gain
    double peak = 0.0;
    for (double g2 = 0.005; g2 <= 1.0; g2 += 0.005)
        peak = std::max(peak, delta_inf(std::sqrt(g2)));
    CHECK(peak <= 0.098 + 1e-3);
}

TEST_CASE("finite-SNR gap stays under its analytic ceiling") {
    for (double P : {10.0, 100.0, 1000.0}) {
        for (double g2 = 0.1; g2 <= 1.0; g2 += 0.1) {
            if (!(std::pow(P, -1.0 / 3.0) < g2)) continue;
            DeltaGap d = delta_gap(P, std::sqrt(g2));
            CHECK(d.delta <= d.ceiling + 1e-9);
        }
    }
    CHECK_THROWS_AS(delta_gap(1000.0, 0.1), std::domain_error);
}

TEST_CASE("high-SNR characterization") {
    double P = 1e6;
    double g = std::sqrt(0.5);
    HighSnrResult h = high_snr_characterization(P, g);
    CHECK(h.in_regime);
    CHECK(h.r_inf == doctest::Approx(r_sym_star(P, g)));
    CHECK(std::fabs(std::max(r_shk(P, g), underline_r(P, g)) - h.r_inf) <= 0.01);
    // both branches coincide exactly at the sub-regime split
    double gs = std::sqrt(kModerateG2Min);
    CHECK(0.5 * std::log2(2.0 * gs + 1.0 / gs) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(high_snr_characterization(100.0, 0.1).in_regime);
}

TEST_CASE("power offset extrapolation") {
    std::vector<double> ps = {1e5, 1e7, 1e9};
    auto sym = [](double P) { return r_sym_star(P, 1.0); };
    PowerOffsetResult r = power_offset(sym, ps);
    CHECK(r.converged);
    CHECK(r.estimate == doctest::Approx(-1.0).epsilon(1e-3));  // -log2(|g| + 1/|g|)
    CHECK(r.sequence.size() == 3);
    CHECK_THROWS_AS(power_offset(sym, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(power_offset(sym, {10.0, 5.0, 20.0}), std::invalid_argument);
}
