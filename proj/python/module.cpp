// Python bindings for the main operations of the SWIPT relay AAoI toolkit.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swiptaoi/analytic.hpp"
#include "swiptaoi/channel.hpp"
#include "swiptaoi/config.hpp"
#include "swiptaoi/fbl.hpp"
#include "swiptaoi/mcsim.hpp"
#include "swiptaoi/sweep.hpp"

namespace py = pybind11;
using namespace swiptaoi;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Average AoI of a two-way SWIPT DF relay under finite-blocklength coding";

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("p_a", &SystemConfig::p_a)
        .def_readwrite("p_b", &SystemConfig::p_b)
        .def_readwrite("d_ar", &SystemConfig::d_ar)
        .def_readwrite("d_br", &SystemConfig::d_br)
        .def_readwrite("carrier_hz", &SystemConfig::carrier_hz)
        .def_readwrite("t_s", &SystemConfig::t_s)
        .def_readwrite("n_ar", &SystemConfig::n_ar)
        .def_readwrite("n_br", &SystemConfig::n_br)
        .def_readwrite("n_ra", &SystemConfig::n_ra)
        .def_readwrite("n_rb", &SystemConfig::n_rb)
        .def_readwrite("k_ar", &SystemConfig::k_ar)
        .def_readwrite("k_br", &SystemConfig::k_br)
        .def_readwrite("k_ra", &SystemConfig::k_ra)
        .def_readwrite("k_rb", &SystemConfig::k_rb)
        .def_readwrite("noise_r", &SystemConfig::noise_r)
        .def_readwrite("noise_a", &SystemConfig::noise_a)
        .def_readwrite("noise_b", &SystemConfig::noise_b)
        .def_readwrite("rho", &SystemConfig::rho)
        .def_readwrite("eta", &SystemConfig::eta)
        .def_readwrite("e_max", &SystemConfig::e_max)
        .def_readwrite("p_min", &SystemConfig::p_min)
        .def_readwrite("w_a", &SystemConfig::w_a)
        .def_readwrite("w_b", &SystemConfig::w_b)
        .def_readwrite("gcq_v", &SystemConfig::gcq_v)
        .def_readwrite("gcq_m", &SystemConfig::gcq_m)
        .def("__repr__", [](const SystemConfig& c) { return config_to_string(c); });

    m.def("validate_config", &validate_config);
    m.def("load_config", &load_config);

    py::enum_<SourceId>(m, "SourceId")
        .value("A", SourceId::A)
        .value("B", SourceId::B);

    py::enum_<DecodeModel>(m, "DecodeModel")
        .value("exact_q", DecodeModel::exact_q)
        .value("linearized", DecodeModel::linearized);

    py::enum_<Method>(m, "Method")
        .value("closed_form", Method::closed_form)
        .value("exact_quadrature", Method::exact_quadrature)
        .value("monte_carlo", Method::monte_carlo);

    m.def("path_loss_alpha",
          [](double distance_m, double carrier_hz) {
              return path_loss_alpha({distance_m, carrier_hz});
          },
          py::arg("distance_m"), py::arg("carrier_hz"));

    m.def("capacity", &capacity);
    m.def("dispersion", &dispersion);
    m.def("q_function", &q_function);
    m.def("eps_conditional",
          [](double gamma, int n, int k) { return eps_conditional(gamma, {n, k}); },
          py::arg("gamma"), py::arg("n"), py::arg("k"));

    py::class_<GcqSettings>(m, "GcqSettings")
        .def(py::init<>())
        .def_readwrite("nodes_v", &GcqSettings::nodes_v)
        .def_readwrite("nodes_m", &GcqSettings::nodes_m);

    m.def("eps_relay_closed_form", &eps_relay_closed_form);
    m.def("cdf_dest_snr", &cdf_dest_snr,
          py::arg("z"), py::arg("dest"), py::arg("cfg"), py::arg("gcq") = GcqSettings{});
    m.def("eps_dest_gcq", &eps_dest_gcq,
          py::arg("dest"), py::arg("cfg"), py::arg("gcq") = GcqSettings{});
    m.def("success_probability", &success_probability);
    m.def("aaoi", &aaoi, py::arg("cycle_s"), py::arg("phi"));
    m.def("weighted_sum_aaoi", &weighted_sum_aaoi);

    py::class_<AoiReport>(m, "AoiReport")
        .def_readonly("eps_relay_a", &AoiReport::eps_relay_a)
        .def_readonly("eps_relay_b", &AoiReport::eps_relay_b)
        .def_readonly("eps_dest_a", &AoiReport::eps_dest_a)
        .def_readonly("eps_dest_b", &AoiReport::eps_dest_b)
        .def_readonly("phi_a", &AoiReport::phi_a)
        .def_readonly("phi_b", &AoiReport::phi_b)
        .def_readonly("aaoi_a", &AoiReport::aaoi_a)
        .def_readonly("aaoi_b", &AoiReport::aaoi_b)
        .def_readonly("weighted_sum", &AoiReport::weighted_sum)
        .def_readonly("method", &AoiReport::method)
        .def_readonly("ci_radius", &AoiReport::ci_radius);

    m.def("evaluate_analytic", &evaluate_analytic,
          py::arg("cfg"), py::arg("gcq") = GcqSettings{});
    m.def("evaluate_exact", &evaluate_exact,
          py::arg("cfg"), py::arg("gcq") = GcqSettings{});

    py::class_<SuccessEstimate>(m, "SuccessEstimate")
        .def_readonly("phi_a", &SuccessEstimate::phi_a)
        .def_readonly("phi_b", &SuccessEstimate::phi_b)
        .def_readonly("stderr_a", &SuccessEstimate::stderr_a)
        .def_readonly("stderr_b", &SuccessEstimate::stderr_b)
        .def_readonly("trials", &SuccessEstimate::trials);

    py::class_<AgeTrace>(m, "AgeTrace")
        .def_readonly("cycle_count", &AgeTrace::cycle_count)
        .def_readonly("time_avg_age_a", &AgeTrace::time_avg_age_a)
        .def_readonly("time_avg_age_b", &AgeTrace::time_avg_age_b)
        .def_readonly("success_rate_a", &AgeTrace::success_rate_a)
        .def_readonly("success_rate_b", &AgeTrace::success_rate_b)
        .def_readonly("stderr_age_a", &AgeTrace::stderr_age_a)
        .def_readonly("stderr_age_b", &AgeTrace::stderr_age_b);

    m.def("estimate_success", &estimate_success,
          py::arg("cfg"), py::arg("trials"), py::arg("seed"),
          py::arg("model") = DecodeModel::exact_q, py::arg("workers") = 1);
    m.def("simulate_aoi", &simulate_aoi,
          py::arg("cfg"), py::arg("cycles"), py::arg("seed"),
          py::arg("model") = DecodeModel::exact_q, py::arg("workers") = 1);
    m.def("oracle_cdf_dest_snr",
          [](const SystemConfig& cfg, SourceId dest, const std::vector<double>& grid,
             std::uint64_t trials, std::uint64_t seed, int workers) {
              return oracle_cdf_dest_snr(cfg, dest, grid, trials, seed, workers);
          },
          py::arg("cfg"), py::arg("dest"), py::arg("z_grid"), py::arg("trials"),
          py::arg("seed"), py::arg("workers") = 1);
}
