#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gic/analysis.hpp"
#include "gic/lemma_lab.hpp"
#include "gic/lower_bounds.hpp"
#include "gic/param_search.hpp"
#include "gic/rate_region.hpp"
#include "gic/upper_bounds.hpp"
#include "gic/verify.hpp"

namespace py = pybind11;
using namespace gic;

namespace {

BoundId bound_id_from(const std::string& name) {
    for (BoundId id : {BoundId::Etw, BoundId::KramerSym, BoundId::Thm3, BoundId::Thm4,
                       BoundId::Thm5, BoundId::Thm5Swapped, BoundId::Thm6Simplified,
                       BoundId::Cor1RBar, BoundId::RSymStar, BoundId::BestUpper,
                       BoundId::Thm10})
        if (name == bound_name(id)) return id;
    throw std::invalid_argument("unknown bound id: " + name);
}

std::vector<std::pair<double, double>> region_boundary(const std::string& name, double P,
                                                       double g2, int resolution) {
    ChannelParams ch = ChannelParams::symmetric(P, std::sqrt(g2));
    SearchOptions opts;
    if (name == "tdm") return tdm_inner_region(P, resolution).points;
    if (name == "etw") return intersect_and_trace(etw_region(ch), resolution).points;
    if (name == "thm10")
        return intersect_and_trace(thm10_region_minimized(ch, opts), resolution).points;
    if (name == "thm9") {
        auto cons = thm9_region_minimized(ch, {}, opts);
        for (const auto& c : etw_region(ch)) cons.push_back(c);
        return intersect_and_trace(cons, resolution).points;
    }
    throw std::invalid_argument("unknown region: " + name);
}

}  // namespace

PYBIND11_MODULE(_gicbounds, m) {
    m.doc() = "bounds on the two-user Gaussian interference channel";

    py::enum_<Kind>(m, "Kind").value("Real", Kind::Real).value("Complex", Kind::Complex);

    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init<double, double, double, double, Kind>(), py::arg("p1"), py::arg("p2"),
             py::arg("h12"), py::arg("h21"), py::arg("kind") = Kind::Real)
        .def_static("symmetric", &ChannelParams::symmetric, py::arg("P"), py::arg("g"),
                    py::arg("kind") = Kind::Real)
        .def_readwrite("p1", &ChannelParams::p1)
        .def_readwrite("p2", &ChannelParams::p2)
        .def_readwrite("h12", &ChannelParams::h12)
        .def_readwrite("h21", &ChannelParams::h21)
        .def("g12", &ChannelParams::g12)
        .def("g21", &ChannelParams::g21)
        .def("weak", &ChannelParams::weak);

    py::class_<GenieParams>(m, "GenieParams")
        .def(py::init<>())
        .def_readwrite("sigma_n1", &GenieParams::sigma_n1)
        .def_readwrite("sigma_n2", &GenieParams::sigma_n2)
        .def_readwrite("sigma_w1", &GenieParams::sigma_w1)
        .def_readwrite("sigma_w2", &GenieParams::sigma_w2)
        .def_readwrite("rho_n1", &GenieParams::rho_n1)
        .def_readwrite("rho_n2", &GenieParams::rho_n2)
        .def_readwrite("rho_w1", &GenieParams::rho_w1)
        .def_readwrite("rho_w2", &GenieParams::rho_w2)
        .def("valid", &GenieParams::valid);

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("value", &BoundResult::value)
        .def_readonly("feasible", &BoundResult::feasible)
        .def_property_readonly("bound",
                               [](const BoundResult& r) { return bound_name(r.bound_id); })
        .def_property_readonly("kappa", [](const BoundResult& r) { return r.achieving_params; });

    m.def("r_sym_star", &r_sym_star, py::arg("P"), py::arg("g"));
    m.def("kramer_sym", &kramer_sym, py::arg("P"), py::arg("g"));
    m.def("thm6_simplified", &thm6_simplified, py::arg("P"), py::arg("g"));
    m.def("cor1_gamma", &cor1_gamma, py::arg("g"));
    m.def("cor1_rbar", &cor1_rbar, py::arg("P"), py::arg("g"));
    m.def("etw_sum_bound", [](const ChannelParams& ch) { return etw_sum_bound(ch); });
    m.def("thm3_bound", &thm3_bound);
    m.def("thm4_bound", &thm4_bound);
    m.def("thm5_bound", &thm5_bound);
    m.def("thm10_value", &thm10_value);
    m.def(
        "minimize_bound",
        [](const std::string& id, const ChannelParams& ch) {
            SearchOptions opts;
            return minimize_bound(bound_id_from(id), ch, opts);
        },
        py::arg("bound"), py::arg("channel"));
    m.def("best_upper", [](const ChannelParams& ch) {
        SearchOptions opts;
        return best_upper(ch, opts);
    });

    m.def("r_tdm", &r_tdm, py::arg("P"));
    m.def("r_tin", &r_tin, py::arg("P"), py::arg("g"));
    m.def("hk_objective", &hk_objective, py::arg("P"), py::arg("g"), py::arg("a"));
    m.def("hk_a_star", [](double P, double g) {
        HkPoint p = hk_a_star(P, g);
        return py::make_tuple(p.a_star, p.rate, p.regime_ok);
    });
    m.def("hk_sum", &hk_sum, py::arg("P"), py::arg("g"));
    m.def("hk_lower_fixed_a", &hk_lower_fixed_a, py::arg("P"), py::arg("g"));
    m.def("r_shk", &r_shk, py::arg("P"), py::arg("g"));
    m.def("underline_r", &underline_r, py::arg("P"), py::arg("g"));

    m.def("classify", [](double P, double g) {
        RegimeLabel l = classify(P, g);
        return py::make_tuple(regime_name(l.regime), l.alpha, l.g2);
    });
    m.def("delta_gap", [](double P, double g) {
        DeltaGap d = delta_gap(P, g);
        return py::make_tuple(d.delta, d.ceiling);
    });
    m.def("delta_inf", &delta_inf, py::arg("g"));
    m.def("high_snr_characterization", [](double P, double g) {
        HighSnrResult h = high_snr_characterization(P, g);
        return py::make_tuple(h.r_inf, h.ratio, h.ratio_approx, h.in_regime);
    });
    m.def("power_offset",
          [](const std::function<double(double)>& f, const std::vector<double>& ps) {
              PowerOffsetResult r = power_offset(f, ps);
              return py::make_tuple(r.estimate, r.sequence, r.converged);
          });

    m.def("region_boundary", &region_boundary, py::arg("name"), py::arg("P"), py::arg("g2"),
          py::arg("resolution") = 200);

    m.def("lemma1_gap", [](double var_z, double var_x, double var_u, double cov_xu) {
        return lemma1_gap(GaussianTriple::from_parts(var_z, var_x, var_u, cov_xu));
    });
    m.def("lemma2_gap", &lemma2_gap, py::arg("var_x"), py::arg("var_y"), py::arg("sigma_z"),
          py::arg("sigma_w"), py::arg("cov_zw"), py::arg("sigma_v"));

    m.def(
        "run_acceptance",
        [](double tol_scale, const std::string& only) {
            py::list out;
            for (const auto& r : run_acceptance(tol_scale, only)) {
                py::dict d;
                d["name"] = r.name;
                d["criterion"] = r.criterion;
                d["measured"] = r.measured;
                d["limit"] = r.limit;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("tol_scale") = 1.0, py::arg("only") = "");
}
