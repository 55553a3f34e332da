#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "gic/lemma_lab.hpp"

using namespace gic;

TEST_CASE("gaussian triples close both algebraic routes") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        double vz = 0.1 + 2.0 * u(rng), vx = 0.2 + 3.0 * u(rng), vu = 0.2 + 3.0 * u(rng);
        double cxu = 0.9 * (2.0 * u(rng) - 1.0) * std::sqrt(vx * vu);
        CHECK(std::fabs(lemma1_gap(GaussianTriple::from_parts(vz, vx, vu, cxu))) < 1e-10);
    }
}

TEST_CASE("degenerate conditioning falls back to the unconditional identity") {
    CHECK(std::fabs(lemma1_gap(GaussianTriple::from_parts(1.0, 2.0, 0.0, 0.0))) < 1e-12);
}

TEST_CASE("invalid triples are rejected") {
    GaussianTriple t = GaussianTriple::from_parts(1.0, 1.0, 1.0, 0.0);
    t.k[0][2] = 0.5;  // Z correlated with U breaks the hypothesis
    CHECK_FALSE(t.valid());
    CHECK_THROWS_AS(lemma1_gap(t), std::domain_error);
}

TEST_CASE("mixture probe equals zero for a plain gaussian") {
    MixtureSpec mix;  // w1 = 1: single component
    mix.s1 = 1.3;
    ProbeResult p = lemma1_inequality_probe(mix, 0.5, 1.0, 0.8, 2001);
    CHECK(p.converged);
    CHECK(std::fabs(p.gap) < 2e-6);
}

TEST_CASE("symmetric mixture with independent side information gives a positive gap") {
    MixtureSpec mix;
    mix.w1 = 0.5;
    mix.mu1 = -2.0;
    mix.mu2 = 2.0;
    ProbeResult p = lemma1_inequality_probe(mix, 0.0, 1.0, 1.0, 2001);
    CHECK(p.converged);
    CHECK(p.gap > 1e-3);
    // collapsing the mixture closes the gap
    mix.mu1 = -1e-3;
    mix.mu2 = 1e-3;
    ProbeResult q = lemma1_inequality_probe(mix, 0.0, 1.0, 1.0, 2001);
    CHECK(std::fabs(q.gap) < 1e-5);
}

TEST_CASE("conditional difference bound on gaussian instances") {
    // vanishing auxiliary noise with vacuous conditioning closes the chain
    double sz = 0.7, sw = 0.0;
    double sv = std::sqrt(sz * sz + sw * sw);
    CHECK(std::fabs(lemma2_gap(2.0, 0.0, sz, sw, 0.0, sv)) < 1e-12);
    CHECK_THROWS_AS(lemma2_gap(1.0, 1.0, 1.0, 1.0, 0.0, 1.0), std::domain_error);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double vx = 0.1 + 3.0 * u(rng), vy = 3.0 * u(rng);
        double z = 0.1 + u(rng), w = 0.1 + u(rng);
        double cov = (2.0 * u(rng) - 1.0) * z * w;
        double sv2 = z * z + w * w - 2.0 * cov + 2.0 * u(rng);
        CHECK(lemma2_gap(vx, vy, z, w, cov, std::sqrt(sv2)) >= -1e-9);
    }
}

TEST_CASE("unconditional corollary on mixtures") {
    MixtureSpec gauss;
    gauss.s1 = 1.1;
    ProbeResult p = corollary7_gap(0.5, 1.0, 0.0, gauss, 2001);
    CHECK(std::fabs(p.gap) < 2e-6);
    MixtureSpec mix;
    mix.w1 = 0.5;
    mix.mu1 = -2.0;
    mix.mu2 = 2.0;
    ProbeResult q = corollary7_gap(0.5, 1.0, 0.0, mix, 2001);
    CHECK(q.gap > 1e-3);
    ProbeResult r = corollary7_gap(1.0, 1.0, 1.0, mix, 2001);
    CHECK(std::fabs(r.gap) < 2e-6);  // W = Z collapses both sides
    CHECK_THROWS_AS(corollary7_gap(1.0, 0.5, 0.0, mix, 2001), std::domain_error);
}
