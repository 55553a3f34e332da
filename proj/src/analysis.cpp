#include "gic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gic/core.hpp"
#include "gic/lower_bounds.hpp"
#include "gic/upper_bounds.hpp"

namespace gic {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Noisy: return "noisy";
        case Regime::Moderate: return "moderate";
        case Regime::WeakNonModerate: return "weak";
        case Regime::Strong: return "strong";
    }
    return "?";
}

RegimeLabel classify(double P, double g) {
    if (g == 0.0) throw std::domain_error("classify: g must be nonzero");
    RegimeLabel out;
    double g2 = g * g;
    out.g2 = g2;
    out.alpha = P > 1.0 ? std::log(g2 * P) / std::log(P)
                        : std::numeric_limits<double>::quiet_NaN();
    if (g2 > 1.0) {
        out.regime = Regime::Strong;
    } else if (g2 > std::max(kModerateG2Min, std::pow(P, -1.0 / 3.0)) && g2 < 1.0) {
        out.regime = Regime::Moderate;
    } else if (std::fabs(g) * (1.0 + g2 * P) <= 0.5) {
        out.regime = Regime::Noisy;
    } else {
        out.regime = Regime::WeakNonModerate;
    }
    return out;
}

DeltaGap delta_gap(double P, double g) {
    double g2 = g * g, ag = std::fabs(g);
    if (!(std::pow(P, -1.0 / 3.0) < g2 && g2 <= 1.0))
        throw std::domain_error("delta_gap: moderate regime required");
    DeltaGap out;
    out.delta = cor1_rbar(P, g) - underline_r(P, g);
    if (P < 23.3) {
        out.ceiling = 0.5 * std::log2((ag * P + (P + 1.0) / ag) / (1.0 + 2.0 * P));
    } else {
        double g3 = ag * ag * ag;
        out.ceiling = std::max(0.5 * std::log2(4.0 / (2.0 * ag + 1.0 / ag)),
                               0.5 * std::log2((1.0 / g2 + g3 * P) / (1.0 + g3 * P)));
    }
    out.ceiling += cor1_gamma(g);
    return out;
}

double delta_inf(double g) {
    if (g == 0.0) throw std::domain_error("delta_inf: g must be nonzero");
    double g2 = g * g, ag = std::fabs(g);
    if (!(g2 <= 1.0)) throw std::domain_error("delta_inf: g^2 must be in (0, 1]");
    if (g2 <= kModerateG2Min) return 0.5 * std::log2((4.0 * g2 + 1.0) / (2.0 * g2 + 1.0));
    if (g2 <= 0.405 + kClampTol) return 0.5 * std::log2((4.0 * g2 + 1.0) / (4.0 * ag));
    if (g2 <= 0.835 + kClampTol)
        return 0.5 * std::log2(2.0 * g2 / std::sqrt(4.0 * g2 - 1.0));
    return 0.5 * std::log2(1.0 / ag);
}

HighSnrResult high_snr_characterization(double P, double g) {
    double g2 = g * g, ag = std::fabs(g);
    HighSnrResult out;
    out.in_regime = std::pow(P, -1.0 / 3.0) <= g2 && g2 <= 1.0;
    double rsym = r_sym_star(P, g);
    bool low = g2 < kModerateG2Min;
    out.r_inf = low ? rsym + 0.5 * std::log2(2.0 * ag + 1.0 / ag) - 1.0 : rsym;
    double half_log_p = 0.5 * std::log2(P);
    out.ratio = out.r_inf / half_log_p;
    double alpha = std::log(g2 * P) / std::log(P);
    out.ratio_approx = low ? 1.0 - 0.5 * alpha : 0.25 * (3.0 - alpha);
    return out;
}

PowerOffsetResult power_offset(const std::function<double(double)>& rate_of_p,
                               const std::vector<double>& p_list) {
    if (p_list.size() < 3) throw std::invalid_argument("power_offset: need >= 3 powers");
    for (size_t i = 1; i < p_list.size(); ++i)
        if (!(p_list[i] > p_list[i - 1]))
            throw std::invalid_argument("power_offset: P_list must be increasing");
    PowerOffsetResult out;
    for (double P : p_list) out.sequence.push_back(std::log2(P) - 2.0 * rate_of_p(P));
    size_t n = out.sequence.size();
    double sn = out.sequence[n - 1], sp = out.sequence[n - 2];
    // the residual decays like 1/log P, so extrapolate with the log-ratio
    double q = std::log(p_list[n - 1]) / std::log(p_list[n - 2]);
    out.estimate = q != 1.0 ? (q * sn - sp) / (q - 1.0) : sn;
    out.converged = std::fabs(sn - sp) <= 0.01;
    return out;
}

}  // namespace gic
