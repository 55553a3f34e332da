#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gic/analysis.hpp"
#include "gic/lower_bounds.hpp"
#include "gic/param_search.hpp"
#include "gic/rate_region.hpp"
#include "gic/upper_bounds.hpp"
#include "gic/verify.hpp"

using nlohmann::json;
using namespace gic;

namespace {

std::string num(double v) {
    char b[64];
    snprintf(b, sizeof(b), "%.12g", v);
    return b;
}

std::vector<double> parse_range(const std::string& s) {
    std::vector<double> out;
    size_t c1 = s.find(':');
    if (c1 == std::string::npos) {
        out.push_back(std::stod(s));
        return out;
    }
    size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw CLI::ValidationError("range must be start:stop:step");
    double a = std::stod(s.substr(0, c1));
    double b = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    double step = std::stod(s.substr(c2 + 1));
    if (step <= 0.0 || b < a) throw CLI::ValidationError("range must be nonempty with step > 0");
    for (double x = a; x <= b + 1e-12; x += step) out.push_back(x);
    return out;
}

int thread_count(size_t jobs) {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("GIC_BOUNDS_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && unsigned(cap) < n) n = unsigned(cap);
    }
    return int(std::min<size_t>(n, jobs));
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    int nt = thread_count(n);
    if (nt <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) body(i);
        });
    for (auto& th : pool) th.join();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
}

// column registry in fixed enum-then-lower-bound order
const std::vector<std::string> kAllBounds = {
    "etw", "kramer", "thm3", "thm4", "thm5", "thm5_swapped", "thm6", "cor1",
    "r_sym_star", "best_upper", "thm10", "hk", "shk", "tdm", "tin", "underline_r"};

double eval_column(const std::string& name, double P, double g, Kind kind) {
    ChannelParams ch = ChannelParams::symmetric(P, g, kind);
    SearchOptions opts;
    if (name == "etw") return etw_sum_bound(ch).value;
    if (name == "kramer") return kramer_sym(P, g);
    if (name == "thm3") return minimize_bound(BoundId::Thm3, ch, opts).value;
    if (name == "thm4") return minimize_bound(BoundId::Thm4, ch, opts).value;
    if (name == "thm5") return minimize_bound(BoundId::Thm5, ch, opts).value;
    if (name == "thm5_swapped") return minimize_bound(BoundId::Thm5Swapped, ch, opts).value;
    if (name == "thm6") return thm6_simplified(P, g);
    if (name == "cor1") return cor1_rbar(P, g);
    if (name == "r_sym_star") return r_sym_star(P, g);
    if (name == "best_upper") return best_upper(ch, opts).value;
    if (name == "thm10") return minimize_bound(BoundId::Thm10, ch, opts).value;
    if (name == "hk") return hk_sum(P, g);
    if (name == "shk") return r_shk(P, g);
    if (name == "tdm") return r_tdm(P);
    if (name == "tin") return r_tin(P, g);
    if (name == "underline_r") return underline_r(P, g);
    throw CLI::ValidationError("unknown bound id: " + name);
}

std::vector<std::string> select_bounds(const std::string& csv) {
    if (csv.empty()) throw CLI::ValidationError("empty bound list");
    if (csv == "all") return kAllBounds;
    std::vector<std::string> req;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                     : comma - pos);
        if (!tok.empty()) req.push_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (req.empty()) throw CLI::ValidationError("empty bound list");
    // keep registry order regardless of request order
    std::vector<std::string> cols;
    for (const auto& b : kAllBounds)
        if (std::find(req.begin(), req.end(), b) != req.end()) cols.push_back(b);
    for (const auto& r : req)
        if (std::find(kAllBounds.begin(), kAllBounds.end(), r) == kAllBounds.end())
            throw CLI::ValidationError("unknown bound id: " + r);
    return cols;
}

struct GridSpec {
    std::string p, snr_db, g2, alpha;

    std::vector<double> powers() const {
        if (!p.empty() && !snr_db.empty())
            throw CLI::ValidationError("give only one of --p / --snr-db");
        if (!snr_db.empty()) {
            auto db = parse_range(snr_db);
            std::vector<double> out;
            for (double x : db) out.push_back(std::pow(10.0, x / 10.0));
            return out;
        }
        if (p.empty()) throw CLI::ValidationError("one of --p / --snr-db required");
        return parse_range(p);
    }
    // returns (g2, alpha) pairs for a power
    std::vector<std::pair<double, double>> gains(double P) const {
        if (g2.empty() == alpha.empty())
            throw CLI::ValidationError("exactly one of --g2 / --alpha required");
        std::vector<std::pair<double, double>> out;
        if (!g2.empty()) {
            for (double v : parse_range(g2))
                out.push_back({v, P > 1.0 ? std::log(v * P) / std::log(P) : 0.0});
        } else {
            for (double a : parse_range(alpha)) out.push_back({std::pow(P, a - 1.0), a});
        }
        return out;
    }
};

int cmd_sweep(const GridSpec& grid, const std::string& bounds, const std::string& mode,
              const std::string& out, const std::string& format) {
    Kind kind = mode == "Complex" ? Kind::Complex : Kind::Real;
    auto cols = select_bounds(bounds);
    struct Row {
        double P, g2, alpha;
        std::vector<double> vals;
        std::string regime;
    };
    std::vector<Row> rows;
    for (double P : grid.powers())
        for (auto [g2v, al] : grid.gains(P)) rows.push_back({P, g2v, al, {}, ""});
    parallel_for(rows.size(), [&](size_t i) {
        Row& r = rows[i];
        double g = std::sqrt(r.g2);
        for (const auto& c : cols) r.vals.push_back(eval_column(c, r.P, g, kind));
        r.regime = regime_name(classify(r.P, g).regime);
    });
    if (format == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json rec;
            rec["P"] = r.P;
            rec["g2"] = r.g2;
            rec["alpha"] = r.alpha;
            for (size_t j = 0; j < cols.size(); ++j) rec[cols[j]] = r.vals[j];
            rec["regime"] = r.regime;
            arr.push_back(rec);
        }
        write_out(out, arr.dump(2) + "\n");
    } else {
        std::string text = "P,g2,alpha";
        for (const auto& c : cols) text += "," + c;
        text += ",regime\n";
        for (const Row& r : rows) {
            text += num(r.P) + "," + num(r.g2) + "," + num(r.alpha);
            for (double v : r.vals) text += "," + num(v);
            text += "," + r.regime + "\n";
        }
        write_out(out, text);
    }
    return 0;
}

int cmd_region(double P, double g2, const std::string& bounds, int resolution,
               const std::string& out, const std::string& format) {
    ChannelParams ch = ChannelParams::symmetric(P, std::sqrt(g2));
    SearchOptions opts;
    std::vector<std::pair<std::string, RegionBoundary>> regions;
    auto want = [&](const std::string& n) {
        return bounds == "all" || bounds.find(n) != std::string::npos;
    };
    auto etw = etw_region(ch);
    if (want("etw")) regions.push_back({"etw", intersect_and_trace(etw, resolution)});
    if (want("thm9")) {
        auto cons = thm9_region_minimized(ch, {}, opts);
        for (const auto& c : etw) cons.push_back(c);
        regions.push_back({"thm9_etw", intersect_and_trace(cons, resolution)});
    }
    if (want("thm10"))
        regions.push_back(
            {"thm10_thm5", intersect_and_trace(thm10_region_minimized(ch, opts), resolution)});
    if (want("tdm")) regions.push_back({"tdm_inner", tdm_inner_region(P, resolution)});
    if (regions.empty()) throw CLI::ValidationError("no known region in bound list");
    if (format == "json") {
        json arr = json::array();
        for (const auto& [name, b] : regions) {
            json rec;
            rec["name"] = name;
            json pts = json::array();
            for (auto [r1, r2] : b.points) pts.push_back({{"R1", r1}, {"R2", r2}});
            rec["points"] = pts;
            arr.push_back(rec);
        }
        write_out(out, arr.dump(2) + "\n");
    } else {
        std::string text;
        for (const auto& [name, b] : regions) {
            text += "# region: " + name + "\n";
            text += "R1,R2\n";
            for (auto [r1, r2] : b.points) text += num(r1) + "," + num(r2) + "\n";
        }
        write_out(out, text);
    }
    return 0;
}

int cmd_gap(const GridSpec& grid, const std::string& out, const std::string& format) {
    struct Row {
        double P, g2, alpha;
    };
    std::vector<Row> rows;
    for (double P : grid.powers())
        for (auto [g2v, al] : grid.gains(P)) rows.push_back({P, g2v, al});
    json arr = json::array();
    std::string text =
        "P,g2,alpha,regime,delta,delta_ceiling,delta_inf,r_inf,ratio,ratio_approx\n";
    for (const Row& r : rows) {
        double g = std::sqrt(r.g2);
        RegimeLabel lab = classify(r.P, g);
        double d = NAN, ceil = NAN;
        if (lab.regime == Regime::Moderate) {
            DeltaGap dg = delta_gap(r.P, g);
            d = dg.delta;
            ceil = dg.ceiling;
        }
        double di = r.g2 <= 1.0 ? delta_inf(g) : NAN;
        HighSnrResult hs = high_snr_characterization(r.P, g);
        if (format == "json") {
            arr.push_back({{"P", r.P}, {"g2", r.g2}, {"alpha", r.alpha},
                           {"regime", regime_name(lab.regime)}, {"delta", d},
                           {"delta_ceiling", ceil}, {"delta_inf", di}, {"r_inf", hs.r_inf},
                           {"ratio", hs.ratio}, {"ratio_approx", hs.ratio_approx}});
        } else {
            text += num(r.P) + "," + num(r.g2) + "," + num(r.alpha) + "," +
                    regime_name(lab.regime) + "," + num(d) + "," + num(ceil) + "," +
                    num(di) + "," + num(hs.r_inf) + "," + num(hs.ratio) + "," +
                    num(hs.ratio_approx) + "\n";
        }
    }
    write_out(out, format == "json" ? arr.dump(2) + "\n" : text);
    return 0;
}

int cmd_verify(double tol_scale, const std::string& only, const std::string& out) {
    auto results = run_acceptance(tol_scale, only);
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        arr.push_back({{"name", r.name}, {"criterion", r.criterion},
                       {"measured", r.measured}, {"limit", r.limit}, {"pass", r.pass},
                       {"detail", r.detail}});
        all = all && r.pass;
    }
    write_out(out, arr.dump(2) + "\n");
    return all && !results.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-user Gaussian interference channel bound calculator"};
    app.require_subcommand(1);

    GridSpec grid;
    std::string bounds = "all", mode = "Real", out_path, format = "csv";
    double p_scalar = 0.0, g2_scalar = 0.0, tol_scale = 1.0;
    int resolution = 400;
    std::string only;

    auto* sweep = app.add_subcommand("sweep", "tabulate bounds over a parameter grid");
    sweep->add_option("--p", grid.p, "power P, scalar or start:stop:step");
    sweep->add_option("--snr-db", grid.snr_db, "SNR in dB, P = 10^(x/10)");
    sweep->add_option("--g2", grid.g2, "squared cross gain, scalar or range");
    sweep->add_option("--alpha", grid.alpha, "GDOF exponent, g2 = P^(alpha-1)");
    sweep->add_option("--bounds", bounds, "comma list of bound ids or 'all'");
    sweep->add_option("--mode", mode, "Real or Complex")
        ->check(CLI::IsMember({"Real", "Complex"}));
    sweep->add_option("--out", out_path, "output path (default stdout)");
    sweep->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* region = app.add_subcommand("region", "trace capacity-region boundaries");
    region->add_option("--p", p_scalar, "power P")->required();
    region->add_option("--g2", g2_scalar, "squared cross gain")->required();
    region->add_option("--bounds", bounds, "regions: etw,thm9,thm10,tdm or 'all'");
    region->add_option("--resolution", resolution, "points per boundary");
    region->add_option("--out", out_path, "output path (default stdout)");
    region->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* gap = app.add_subcommand("gap", "rate-gap and high-SNR report");
    gap->add_option("--p", grid.p, "power P, scalar or range");
    gap->add_option("--snr-db", grid.snr_db, "SNR in dB");
    gap->add_option("--g2", grid.g2, "squared cross gain, scalar or range");
    gap->add_option("--alpha", grid.alpha, "GDOF exponent range");
    gap->add_option("--out", out_path, "output path (default stdout)");
    gap->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run the acceptance-criteria suite");
    verify->add_option("--tol-scale", tol_scale, "multiplier on all tolerances");
    verify->add_option("--only", only, "keep criteria whose name starts with this");
    verify->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) return cmd_sweep(grid, bounds, mode, out_path, format);
        if (region->parsed())
            return cmd_region(p_scalar, g2_scalar, bounds, resolution, out_path, format);
        if (gap->parsed()) return cmd_gap(grid, out_path, format);
        return cmd_verify(tol_scale, only, out_path);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
