#include "gic/param_search.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "gic/upper_bounds.hpp"

namespace gic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec = std::vector<double>;

struct Box {
    Vec lo, hi;
};

// Symmetric reduction: 4 active coordinates mirrored onto both users.
// Thm3 touches only the W side; the hybrid bounds use (sigma_n1, sigma_w2, rho_n1, rho_w2).
GenieParams kappa_from_vec(BoundId id, bool symmetric, const Vec& x) {
    GenieParams k;
    if (!symmetric) {
        k.sigma_n1 = x[0]; k.sigma_n2 = x[1]; k.sigma_w1 = x[2]; k.sigma_w2 = x[3];
        k.rho_n1 = x[4]; k.rho_n2 = x[5]; k.rho_w1 = x[6]; k.rho_w2 = x[7];
        return k;
    }
    if (id == BoundId::Thm3) {
        k.sigma_w1 = x[0]; k.sigma_w2 = x[1]; k.rho_w1 = x[2]; k.rho_w2 = x[3];
        k.sigma_n1 = k.sigma_n2 = 1.0;
        k.rho_n1 = k.rho_n2 = 0.0;
    } else {
        k.sigma_n1 = k.sigma_n2 = x[0];
        k.sigma_w1 = k.sigma_w2 = x[1];
        k.rho_n1 = k.rho_n2 = x[2];
        k.rho_w1 = k.rho_w2 = x[3];
    }
    return k;
}

Vec vec_from_kappa(BoundId id, bool symmetric, const GenieParams& k) {
    if (!symmetric)
        return {k.sigma_n1, k.sigma_n2, k.sigma_w1, k.sigma_w2,
                k.rho_n1, k.rho_n2, k.rho_w1, k.rho_w2};
    if (id == BoundId::Thm3) return {k.sigma_w1, k.sigma_w2, k.rho_w1, k.rho_w2};
    return {k.sigma_n1, k.sigma_w2, k.rho_n1, k.rho_w2};
}

double eval_bound(BoundId id, const ChannelParams& ch, const GenieParams& k) {
    switch (id) {
        case BoundId::Thm3: return thm3_bound(ch, k).value;
        case BoundId::Thm4: return thm4_bound(ch, k).value;
        case BoundId::Thm5: return thm5_bound(ch, k).value;
        case BoundId::Thm5Swapped: return thm5_swapped_bound(ch, k).value;
        case BoundId::Thm10: return thm10_value(ch, k).value;
        default: throw std::domain_error("minimize_bound: unsupported bound id");
    }
}

void clamp_into(const Box& box, Vec& x) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], box.lo[i], box.hi[i]);
}

bool lex_less(const Vec& a, const Vec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// standard Nelder-Mead with box clamping; returns best vertex
std::pair<Vec, double> nelder_mead(const std::function<double(const Vec&)>& f, const Box& box,
                                   Vec x0, int max_iters, double tol) {
    size_t n = x0.size();
    clamp_into(box, x0);
    std::vector<std::pair<Vec, double>> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({x0, f(x0)});
    for (size_t i = 0; i < n; ++i) {
        Vec xi = x0;
        double h = 0.08 * (box.hi[i] - box.lo[i]);
        xi[i] = xi[i] + h <= box.hi[i] ? xi[i] + h : xi[i] - h;
        clamp_into(box, xi);
        simplex.push_back({xi, f(xi)});
    }
    auto by_value = [](const auto& a, const auto& b) { return a.second < b.second; };
    for (int it = 0; it < max_iters; ++it) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        double best = simplex.front().second, worst = simplex.back().second;
        if (std::isfinite(best) && std::isfinite(worst) && worst - best < tol) break;
        Vec centroid(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) centroid[j] += simplex[i].first[j];
        }
        for (double& c : centroid) c /= double(n);
        auto blend = [&](double coef) {
            Vec x(n);
            for (size_t j = 0; j < n; ++j)
                x[j] = centroid[j] + coef * (centroid[j] - simplex.back().first[j]);
            clamp_into(box, x);
            return x;
        };
        Vec xr = blend(1.0);
        double fr = f(xr);
        if (fr < simplex.front().second) {
            Vec xe = blend(2.0);
            double fe = f(xe);
            simplex.back() = fe < fr ? std::make_pair(xe, fe) : std::make_pair(xr, fr);
        } else if (fr < simplex[n - 1].second) {
            simplex.back() = {xr, fr};
        } else {
            Vec xc = blend(-0.5);
            double fc = f(xc);
            if (fc < simplex.back().second) {
                simplex.back() = {xc, fc};
            } else {
                for (size_t i = 1; i <= n; ++i) {
                    for (size_t j = 0; j < n; ++j)
                        simplex[i].first[j] =
                            0.5 * (simplex[i].first[j] + simplex[0].first[j]);
                    clamp_into(box, simplex[i].first);
                    simplex[i].second = f(simplex[i].first);
                }
            }
        }
    }
    std::sort(simplex.begin(), simplex.end(), by_value);
    return simplex.front();
}

}  // namespace

BoundResult minimize_bound(BoundId id, const ChannelParams& ch, const SearchOptions& opts) {
    bool symmetric = ch.symmetric_channel();
    size_t dim = symmetric ? 4 : 8;
    Box box;
    if (symmetric) {
        box.lo = {0.0, 0.0, -1.0, -1.0};
        box.hi = {1.0, 1.0, 1.0, 1.0};
    } else {
        box.lo = {0, 0, 0, 0, -1, -1, -1, -1};
        box.hi = {1, 1, 1, 1, 1, 1, 1, 1};
    }
    auto f = [&](const Vec& x) { return eval_bound(id, ch, kappa_from_vec(id, symmetric, x)); };

    // coarse grid scan
    int n = std::max(2, opts.grid_points_per_dim);
    if (dim == 8) n = std::min(n, 5);
    std::vector<std::pair<double, Vec>> ranked;
    Vec x(dim);
    std::vector<int> idx(dim, 0);
    for (;;) {
        for (size_t i = 0; i < dim; ++i)
            x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / double(n - 1);
        double v = f(x);
        if (std::isfinite(v)) ranked.push_back({v, x});
        size_t d = 0;
        while (d < dim && ++idx[d] == n) idx[d++] = 0;
        if (d == dim) break;
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return lex_less(a.second, b.second);
    });

    std::vector<Vec> starts;
    int restarts = std::max(1, opts.restarts);
    for (size_t i = 0; i < ranked.size() && int(starts.size()) < restarts; ++i)
        starts.push_back(ranked[i].second);
    if ((id == BoundId::Thm5 || id == BoundId::Thm5Swapped) && symmetric) {
        double g = ch.h12;
        starts.push_back(vec_from_kappa(id, symmetric, thm5_a_step_kappa(g)));
        starts.push_back(vec_from_kappa(id, symmetric, thm5_b_step_kappa(g)));
    }

    double best_v = kInf;
    Vec best_x;
    auto consider = [&](const Vec& xx, double vv) {
        if (!std::isfinite(vv)) return;
        if (vv < best_v - 1e-15 ||
            (std::fabs(vv - best_v) <= 1e-15 && (best_x.empty() || lex_less(xx, best_x)))) {
            best_v = std::min(vv, best_v);
            best_x = xx;
        }
    };
    for (const Vec& s : starts) {
        Vec s2 = s;
        clamp_into(box, s2);
        consider(s2, f(s2));
        auto [xm, vm] = nelder_mead(f, box, s2, opts.refine_iters, opts.tol_bits);
        consider(xm, vm);
    }

    if (best_x.empty()) {
        BoundResult r;
        r.value = kInf;
        r.feasible = false;
        r.bound_id = id;
        r.channel = ch;
        return r;
    }
    GenieParams k = kappa_from_vec(id, symmetric, best_x);
    switch (id) {
        case BoundId::Thm3: return thm3_bound(ch, k);
        case BoundId::Thm4: return thm4_bound(ch, k);
        case BoundId::Thm5: return thm5_bound(ch, k);
        case BoundId::Thm5Swapped: return thm5_swapped_bound(ch, k);
        default: return thm10_value(ch, k);
    }
}

}  // namespace gic
