#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "siqkd/bb84.hpp"
#include "siqkd/fock.hpp"
#include "siqkd/report.hpp"
#include "siqkd/verify.hpp"

namespace py = pybind11;
using namespace siqkd;

PYBIND11_MODULE(_siqkd, m) {
    m.doc() = "Finite-size secure key rate engine for interference-based QKD";

    py::register_exception<InvalidSource>(m, "InvalidSource", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CutoffTooSmall>(m, "CutoffTooSmall", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ConfigParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ConfigValidationError", PyExc_ValueError);

    py::class_<PhotonNumberDistribution>(m, "PhotonNumberDistribution")
        .def_readonly("p0", &PhotonNumberDistribution::p0)
        .def_readonly("p1", &PhotonNumberDistribution::p1)
        .def_readonly("p2", &PhotonNumberDistribution::p2)
        .def_readonly("mean", &PhotonNumberDistribution::mean)
        .def_readonly("g2", &PhotonNumberDistribution::g2)
        .def("__repr__", [](const PhotonNumberDistribution& d) {
            return "PhotonNumberDistribution(p0=" + std::to_string(d.p0) +
                   ", p1=" + std::to_string(d.p1) + ", p2=" + std::to_string(d.p2) + ")";
        });

    m.def("sps_distribution", &sps_distribution, py::arg("mean"), py::arg("g2"));
    m.def("odd_cat_g2", &odd_cat_g2, py::arg("mu"));
    m.def("odd_cat_mean", &odd_cat_mean, py::arg("mu"));
    m.def("odd_cat_distribution", &odd_cat_distribution, py::arg("mu"));
    m.def("odd_cat_fock_check", &odd_cat_fock_check, py::arg("mu"), py::arg("cutoff"),
          "Returns (mean, g2) recomputed from the truncated Fock expansion");

    py::enum_<Routing>(m, "Routing").value("active", Routing::Active).value("passive", Routing::Passive);

    py::class_<LinkParams>(m, "LinkParams")
        .def(py::init<>())
        .def_readwrite("alpha_db_per_km", &LinkParams::alpha_db_per_km)
        .def_readwrite("total_distance", &LinkParams::total_distance)
        .def_readwrite("eta_det", &LinkParams::eta_det)
        .def_readwrite("p_d", &LinkParams::p_d)
        .def_readwrite("e_d", &LinkParams::e_d)
        .def_readwrite("p_z", &LinkParams::p_z)
        .def_readwrite("routing", &LinkParams::routing);

    m.def("channel_efficiency", &channel_efficiency);

    py::enum_<Basis>(m, "Basis").value("Z", Basis::Z).value("X", Basis::X);

    py::class_<GainTable>(m, "GainTable")
        .def("correct", &GainTable::correct)
        .def("error", &GainTable::error)
        .def("total", &GainTable::total)
        .def("qber", &GainTable::e);

    m.def("basis_gains", &basis_gains, py::arg("dist"), py::arg("link"));
    m.def("oracle_basis_gains", &fock::oracle_basis_gains, py::arg("dist"), py::arg("link"),
          "Exact Fock-state enumeration of the per-basis gains");

    m.def("binary_entropy", &binary_entropy);
    m.def("chernoff_upper", &chernoff_upper, py::arg("x_star"), py::arg("eps"));
    m.def("gamma_u", &gamma_u, py::arg("n"), py::arg("k"), py::arg("lambda_"), py::arg("eps"));

    py::enum_<Protocol>(m, "Protocol").value("si", Protocol::Si).value("sps_bb84", Protocol::SpsBb84);
    py::enum_<SourceType>(m, "SourceType").value("sps", SourceType::Sps).value("odd_cat", SourceType::OddCat);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("eta_det", &RunConfig::eta_det)
        .def_readwrite("p_d", &RunConfig::p_d)
        .def_readwrite("e_d", &RunConfig::e_d)
        .def_readwrite("alpha_db_per_km", &RunConfig::alpha_db_per_km)
        .def_readwrite("f", &RunConfig::f)
        .def_readwrite("eps_cor", &RunConfig::eps_cor)
        .def_readwrite("eps_sec", &RunConfig::eps_sec)
        .def_readwrite("N", &RunConfig::n_pulses)
        .def_readwrite("source_type", &RunConfig::source_type)
        .def_readwrite("g2", &RunConfig::g2)
        .def_readwrite("mu", &RunConfig::mu)
        .def_readwrite("mean", &RunConfig::mean)
        .def_readwrite("protocol", &RunConfig::protocol)
        .def_readwrite("routing", &RunConfig::routing)
        .def_readwrite("d_min", &RunConfig::d_min)
        .def_readwrite("d_max", &RunConfig::d_max)
        .def_readwrite("d_step", &RunConfig::d_step)
        .def_readwrite("si_grid", &RunConfig::si_grid)
        .def_readwrite("bb84_grid", &RunConfig::bb84_grid)
        .def_readwrite("refine_iters", &RunConfig::refine_iters);

    m.def("parse_config", &parse_config, py::arg("text"));

    py::class_<ProtocolParams>(m, "ProtocolParams")
        .def(py::init<>())
        .def_readwrite("source_knob", &ProtocolParams::source_knob)
        .def_readwrite("p_z", &ProtocolParams::p_z)
        .def_readwrite("eta_att", &ProtocolParams::eta_att)
        .def_readwrite("q_z", &ProtocolParams::q_z);

    py::class_<KeyRatePoint>(m, "KeyRatePoint")
        .def_readonly("distance_km", &KeyRatePoint::distance_km)
        .def_readonly("mean_photon", &KeyRatePoint::mean_photon)
        .def_readonly("p_z", &KeyRatePoint::p_z)
        .def_readonly("eta_att", &KeyRatePoint::eta_att)
        .def_readonly("q_z", &KeyRatePoint::q_z)
        .def_readonly("q_total_z", &KeyRatePoint::q_total_z)
        .def_readonly("qber_z", &KeyRatePoint::qber_z)
        .def_readonly("qber_x", &KeyRatePoint::qber_x)
        .def_readonly("phase_error", &KeyRatePoint::phase_error)
        .def_readonly("key_length", &KeyRatePoint::key_length)
        .def_readonly("skr", &KeyRatePoint::skr)
        .def_readonly("diagnostic", &KeyRatePoint::diagnostic);

    m.def("evaluate_rate", &evaluate_rate, py::arg("config"), py::arg("distance_km"), py::arg("params"));
    m.def("optimize_point", &optimize_point, py::arg("config"), py::arg("distance_km"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep", &sweep, py::arg("config"), py::arg("distances"),
          py::call_guard<py::gil_scoped_release>());

    m.def("run_sweep", &run_sweep, py::arg("config"), py::call_guard<py::gil_scoped_release>(),
          "Optimized distance sweep serialized as a CSV document");
    m.def("run_compare", &run_compare, py::arg("config"), py::arg("overlay_csv") = std::string(),
          py::call_guard<py::gil_scoped_release>());

    m.def("run_verify", [] {
        auto report = run_verify();
        return py::make_tuple(report.all_pass(), report.to_string());
    });
}
