#include "gic/lower_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace gic {

namespace {
void require_gain(double g) {
    if (g == 0.0) throw std::domain_error("cross gain must be nonzero");
}
}  // namespace

double r_tdm(double P) {
    if (!(P > 0.0)) throw std::domain_error("r_tdm: P must be positive");
    return 0.5 * std::log2(1.0 + 2.0 * P);
}

double r_tin(double P, double g) {
    if (!(P > 0.0)) throw std::domain_error("r_tin: P must be positive");
    double g2 = g * g;
    return std::log2(1.0 + P / (g2 * P + 1.0));
}

double hk_objective(double P, double g, double a) {
    double g2 = g * g;
    double ab = 1.0 - a;
    double common = 0.5 * std::log2(1.0 + a * P);
    double b1 = 0.25 * std::log2(1.0 + (ab * P + g2 * P) / (1.0 + a * P)) +
                0.25 * std::log2(1.0 + (P + g2 * ab * P) / (1.0 + g2 * a * P));
    double b2 = 0.5 * std::log2(1.0 + g2 * ab * P / (1.0 + g2 * a * P)) +
                0.5 * std::log2(1.0 + g2 * P / (1.0 + a * P));
    return common + std::min(b1, b2);
}

namespace {

// golden-section refinement of the (unimodal envelope) objective
double maximize_objective(double P, double g, double lo, double hi) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = hk_objective(P, g, c), fd = hk_objective(P, g, d);
    while (b - a > 1e-12) {
        if (fc > fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = hk_objective(P, g, c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = hk_objective(P, g, d);
        }
    }
    return 0.5 * (a + b);
}

double numeric_a_star(double P, double g) {
    double best_a = 0.0, best_v = hk_objective(P, g, 0.0);
    const int n = 1000;
    for (int i = 1; i <= n; ++i) {
        double a = double(i) / n;
        double v = hk_objective(P, g, a);
        if (v > best_v) { best_v = v; best_a = a; }
    }
    double lo = std::max(0.0, best_a - 2.0 / n), hi = std::min(1.0, best_a + 2.0 / n);
    return maximize_objective(P, g, lo, hi);
}

}  // namespace

HkPoint hk_a_star(double P, double g) {
    require_gain(g);
    double g2 = g * g;
    HkPoint pt;
    pt.regime_ok = g2 > std::pow(P, -1.0 / 3.0) && g2 < 1.0;
    double a0 = (1.0 + P + g2 * P) * (1.0 + P + g2 * P);
    double a1 = (1.0 + g2 * P) * (1.0 + g2 * P);
    double a2 = 2.0 * std::pow(a1, 1.5) - a0 * (1.0 + g2);
    double den = 2.0 * (a0 * g2 - a1) * P;
    double disc = a2 * a2 - 4.0 * (a0 * g2 - a1) * (a0 - a1 * a1);
    if (std::fabs(den) < 1e-9 * a0 || disc < 0.0) {
        pt.a_star = numeric_a_star(P, g);
    } else {
        pt.a_star = std::clamp((a2 + std::sqrt(disc)) / den, 0.0, 1.0);
    }
    pt.rate = hk_objective(P, g, pt.a_star);
    return pt;
}

double hk_sum(double P, double g) {
    HkPoint pt = hk_a_star(P, g);
    double g2 = g * g;
    double a = pt.a_star, ab = 1.0 - a;
    return 0.5 * std::log2(1.0 + a * P) +
           0.25 * std::log2(1.0 + (ab * P + g2 * P) / (1.0 + a * P)) +
           0.25 * std::log2(1.0 + (P + g2 * ab * P) / (1.0 + g2 * a * P));
}

double hk_lower_fixed_a(double P, double g) {
    require_gain(g);
    double a = std::pow(std::fabs(g), 3.0);
    return hk_objective(P, g, a);
}

double r_shk(double P, double g) {
    require_gain(g);
    double g2 = g * g;
    return 0.5 * std::log2(1.0 + P + g2 * P) + 0.5 * std::log2(2.0 + 1.0 / g2) - 1.0;
}

double underline_r(double P, double g) {
    if (P < 23.3) return r_tdm(P);
    return std::max(hk_lower_fixed_a(P, g), r_shk(P, g));
}

}  // namespace gic
