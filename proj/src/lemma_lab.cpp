#include "gic/lemma_lab.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "gic/core.hpp"

namespace gic {

namespace {

double entropy_r(double v) { return gaussian_entropy(v, Kind::Real); }

double gauss_pdf(double x, double mu, double var) {
    return std::exp(-0.5 * (x - mu) * (x - mu) / var) / std::sqrt(2.0 * M_PI * var);
}

// composite Simpson on [a, b] with an odd point count
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2 == 0) ++n;
    double h = (b - a) / (n - 1);
    double acc = f(a) + f(b);
    for (int i = 1; i < n - 1; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

// differential entropy in bits of a 1-D density by quadrature
double entropy_1d(const std::function<double(double)>& pdf, double lo, double hi, int n) {
    return simpson([&](double x) { return plogp(pdf(x)); }, lo, hi, n);
}

struct Gauss2 {
    double mu_a, mu_b, vaa, vab, vbb;
};

double pdf2(const std::vector<std::pair<double, Gauss2>>& comps, double a, double b) {
    double p = 0.0;
    for (const auto& [w, g] : comps) {
        double det = g.vaa * g.vbb - g.vab * g.vab;
        double da = a - g.mu_a, db = b - g.mu_b;
        double q = (g.vbb * da * da - 2.0 * g.vab * da * db + g.vaa * db * db) / det;
        p += w * std::exp(-0.5 * q) / (2.0 * M_PI * std::sqrt(det));
    }
    return p;
}

double entropy_2d(const std::vector<std::pair<double, Gauss2>>& comps, double lo_a,
                  double hi_a, double lo_b, double hi_b, int n) {
    if (n % 2 == 0) ++n;
    double ha = (hi_a - lo_a) / (n - 1), hb = (hi_b - lo_b) / (n - 1);
    auto wgt = [n](int i) { return i == 0 || i == n - 1 ? 1.0 : (i % 2 ? 4.0 : 2.0); };
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double a = lo_a + i * ha;
        double row = 0.0;
        for (int j = 0; j < n; ++j)
            row += wgt(j) * plogp(pdf2(comps, a, lo_b + j * hb));
        acc += wgt(i) * row;
    }
    return acc * ha * hb / 9.0;
}

}  // namespace

GaussianTriple GaussianTriple::from_parts(double var_z, double var_x, double var_u,
                                          double cov_xu) {
    GaussianTriple t;
    t.k = {{{var_z, var_z, 0.0},
            {var_z, var_x + var_z, cov_xu},
            {0.0, cov_xu, var_u}}};
    return t;
}

bool GaussianTriple::valid(double tol) const {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::fabs(k[i][j] - k[j][i]) > tol) return false;
    // independence of Z from the X and U blocks
    if (std::fabs(k[0][1] - k[0][0]) > tol || std::fabs(k[0][2]) > tol) return false;
    // PSD via leading principal minors with slack
    double m1 = k[0][0];
    double m2 = k[0][0] * k[1][1] - k[0][1] * k[0][1];
    double m3 = k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[1][2]) -
                k[0][1] * (k[0][1] * k[2][2] - k[1][2] * k[0][2]) +
                k[0][2] * (k[0][1] * k[1][2] - k[1][1] * k[0][2]);
    return m1 >= -tol && m2 >= -tol && m3 >= -tol;
}

double lemma1_gap(const GaussianTriple& t) {
    if (!t.valid()) throw std::domain_error("lemma1_gap: invalid triple");
    const auto& K = t.k;
    double var_z = K[0][0];
    if (!(var_z > 0.0)) return 0.0;
    double var_xz = K[1][1], var_u = K[2][2];
    double var_x = var_xz - 2.0 * K[0][1] + var_z;
    double cov_xu = K[1][2] - K[0][2];
    bool cond = var_u > 1e-15;
    // route one: both sides of the stated identity
    double vx = cond ? conditional_variance(var_x, var_u, cov_xu) : var_x;
    double vxz = cond ? conditional_variance(var_xz, var_u, K[1][2]) : var_xz;
    double route1 = 0.5 * std::log2(vx / vxz);
    // route two: the proof's mutual-information form
    double vz_u = cond ? conditional_variance(var_z, var_u, K[0][2]) : var_z;
    double det =
        cond ? var_xz * var_u - K[1][2] * K[1][2] : var_xz;
    double quad = cond ? (var_u * K[0][1] * K[0][1] - 2.0 * K[1][2] * K[0][1] * K[0][2] +
                          var_xz * K[0][2] * K[0][2]) /
                             det
                       : K[0][1] * K[0][1] / var_xz;
    double vz_both = std::max(var_z - quad, 0.0);
    double route2 = 0.5 * std::log2(vz_both / vz_u);
    return route1 - route2;
}

double MixtureSpec::mean() const { return w1 * mu1 + (1.0 - w1) * mu2; }

double MixtureSpec::variance() const {
    double m = mean();
    double w2 = 1.0 - w1;
    return w1 * (s1 * s1 + (mu1 - m) * (mu1 - m)) + w2 * (s2 * s2 + (mu2 - m) * (mu2 - m));
}

double MixtureSpec::pdf(double x) const {
    return w1 * gauss_pdf(x, mu1, s1 * s1) + (1.0 - w1) * gauss_pdf(x, mu2, s2 * s2);
}

ProbeResult lemma1_inequality_probe(const MixtureSpec& mix, double c, double var_g,
                                    double sigma_z, int points) {
    double var_z = sigma_z * sigma_z;
    double var_x = mix.variance();
    double var_u = c * c * var_x + var_g;
    double cov_xu = c * var_x;
    GaussianTriple t = GaussianTriple::from_parts(var_z, var_x, var_u, cov_xu);
    // Gaussian right side of the inequality at the exact covariance
    bool cond = var_u > 1e-15;
    double vx_u = cond ? conditional_variance(var_x, var_u, cov_xu) : var_x;
    double vxz_u = cond ? conditional_variance(var_x + var_z, var_u, cov_xu) : var_x + var_z;
    double right = 0.5 * std::log2(vx_u / vxz_u);

    double m = mix.mean();
    double spread = 10.0 * std::sqrt(std::max({var_x, mix.s1 * mix.s1, mix.s2 * mix.s2})) +
                    std::fabs(mix.mu1 - m) + std::fabs(mix.mu2 - m);
    double lo_x = m - spread, hi_x = m + spread;

    auto left_at = [&](int n) {
        if (c == 0.0 || !cond) {
            // U carries no information about X
            double h_x = entropy_1d([&](double x) { return mix.pdf(x); }, lo_x, hi_x, n);
            auto pdf_y = [&](double y) {
                return mix.w1 * gauss_pdf(y, mix.mu1, mix.s1 * mix.s1 + var_z) +
                       (1.0 - mix.w1) * gauss_pdf(y, mix.mu2, mix.s2 * mix.s2 + var_z);
            };
            double h_y = entropy_1d(pdf_y, lo_x - 10.0 * sigma_z, hi_x + 10.0 * sigma_z, n);
            return h_x - h_y;
        }
        // h(X|U) - h(X+Z|U) = h(X,U) - h(X+Z,U); h(X,U) = h(X) + h(G)
        double h_x = entropy_1d([&](double x) { return mix.pdf(x); }, lo_x, hi_x, n);
        double h_xu = h_x + entropy_r(var_g);
        std::vector<std::pair<double, Gauss2>> comps;
        auto add = [&](double w, double mu, double s) {
            double v = s * s;
            comps.push_back({w, {mu, c * mu, v + var_z, c * v, c * c * v + var_g}});
        };
        add(mix.w1, mix.mu1, mix.s1);
        add(1.0 - mix.w1, mix.mu2, mix.s2);
        double su = std::sqrt(var_u);
        int n2 = std::max(201, n / 8) | 1;
        double h_yu = entropy_2d(comps, lo_x - 10.0 * sigma_z, hi_x + 10.0 * sigma_z,
                                 c * m - 10.0 * su, c * m + 10.0 * su, n2);
        return h_xu - h_yu;
    };

    double left = left_at(points);
    double left_coarse = left_at(points / 2);
    ProbeResult out;
    out.gap = right - left;
    out.converged = std::fabs(left - left_coarse) <= 1e-6;
    (void)t;
    return out;
}

double lemma2_gap(double var_x, double var_y, double sigma_z, double sigma_w,
                  double cov_zw, double sigma_v) {
    double var_zmw = sigma_z * sigma_z + sigma_w * sigma_w - 2.0 * cov_zw;
    double var_v = sigma_v * sigma_v;
    if (var_v < var_zmw - kClampTol)
        throw std::domain_error("lemma2_gap: sigma_v^2 must dominate var(Z - W)");
    double var_vt = std::max(var_v - var_zmw, 0.0);
    double var_a = var_x + var_y + sigma_z * sigma_z;
    double var_b = var_y + sigma_w * sigma_w;
    double cov_ab = var_y + cov_zw;
    double left = (var_b > 1e-15 ? entropy_r(conditional_variance(var_a, var_b, cov_ab))
                                 : entropy_r(var_a)) -
                  entropy_r(var_x + var_v);
    double right = (var_b > 1e-15
                        ? entropy_r(conditional_variance(var_a, var_b, cov_ab)) -
                              entropy_r(conditional_variance(var_a + var_vt, var_b, cov_ab))
                        : entropy_r(var_a) - entropy_r(var_a + var_vt));
    return right - left;
}

ProbeResult corollary7_gap(double sigma_w, double sigma_z, double cov_wz,
                           const MixtureSpec& mix, int points) {
    double var_w = sigma_w * sigma_w, var_z = sigma_z * sigma_z;
    if (var_z < var_w - kClampTol)
        throw std::domain_error("corollary7_gap: requires sigma_z >= sigma_w");
    if (std::fabs(cov_wz) > sigma_w * sigma_z + kClampTol)
        throw std::domain_error("corollary7_gap: invalid correlation");
    double var_x = mix.variance();
    double right = 0.5 * std::log2((var_x + var_w) / (var_x + var_z));

    double m = mix.mean();
    double spread = 10.0 * std::sqrt(std::max({var_x, mix.s1 * mix.s1, mix.s2 * mix.s2})) +
                    std::fabs(mix.mu1 - m) + std::fabs(mix.mu2 - m) + 10.0 * sigma_z;
    auto mix_plus = [&](double extra) {
        return [&mix, extra](double y) {
            return mix.w1 * gauss_pdf(y, mix.mu1, mix.s1 * mix.s1 + extra) +
                   (1.0 - mix.w1) * gauss_pdf(y, mix.mu2, mix.s2 * mix.s2 + extra);
        };
    };
    auto left_at = [&](int n) {
        double h_w = var_w > 0.0
                         ? entropy_1d(mix_plus(var_w), m - spread, m + spread, n)
                         : entropy_1d([&](double x) { return mix.pdf(x); }, m - spread,
                                      m + spread, n);
        double h_z = entropy_1d(mix_plus(var_z), m - spread, m + spread, n);
        return h_w - h_z;
    };
    double left = left_at(points);
    ProbeResult out;
    out.gap = right - left;
    out.converged = std::fabs(left - left_at(points / 2)) <= 1e-6;
    return out;
}

}  // namespace gic
