#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "comb/band_scan.hpp"
#include "comb/constraint_matrix.hpp"
#include "comb/dispersion.hpp"
#include "comb/exact_oracle.hpp"
#include "comb/isw.hpp"
#include "comb/moments.hpp"

namespace py = pybind11;
using namespace comb;

namespace {

LatticeParams make_params(double a, double A) { return LatticeParams(a, A); }

py::object min_energy_to_py(const MinEnergy& m) {
    switch (m.kind) {
        case MinEnergy::Kind::value: return py::float_(m.value);
        case MinEnergy::Kind::unbounded_below: return py::str("unbounded-below");
        default: return py::str("none-allowed");
    }
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Kronig-Penney bootstrap: moment matrices, band scans, dispersion";
    mod.attr("__version__") = std::string(version);

    py::register_exception<pole_error>(mod, "PoleError");
    py::register_exception<non_convergence_error>(mod, "NonConvergenceError");
    py::register_exception<missing_moment_error>(mod, "MissingMomentError");
    py::register_exception<numeric_error>(mod, "NumericError");

    py::class_<LatticeParams>(mod, "LatticeParams")
        .def(py::init(&make_params), py::arg("a") = 2.0, py::arg("A") = 2.0)
        .def_readonly("a", &LatticeParams::a)
        .def_readonly("A", &LatticeParams::A)
        .def("mode_energy", &LatticeParams::mode_energy, py::arg("m"));

    py::enum_<Regularization>(mod, "Regularization")
        .value("finite_k", Regularization::finite_k)
        .value("zeta", Regularization::zeta);
    py::enum_<Rho0Source>(mod, "Rho0Source")
        .value("finite_k", Rho0Source::finite_k)
        .value("analytic", Rho0Source::analytic);

    py::class_<BandInterval>(mod, "BandInterval")
        .def(py::init<>())
        .def_readwrite("lo", &BandInterval::lo)
        .def_readwrite("hi", &BandInterval::hi)
        .def_readwrite("index", &BandInterval::index)
        .def("__repr__", [](const BandInterval& b) {
            return "BandInterval(" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + ")";
        });

    mod.def("kp_dispersion_rhs", &kp_dispersion_rhs, py::arg("E"), py::arg("params"));
    mod.def("exact_band_edges", &exact_band_edges, py::arg("params"), py::arg("e_max"));
    mod.def("rho0_analytic", &rho0_analytic, py::arg("E"), py::arg("params"));
    mod.def("rho_x_analytic", &rho_x_analytic, py::arg("x"), py::arg("E"),
            py::arg("params"), py::arg("modes"));

    mod.def("rho0_finite_k", &rho0_finite_k, py::arg("E"), py::arg("params"), py::arg("K"));
    mod.def("t_moment", &t_moment, py::arg("n"), py::arg("E"), py::arg("params"),
            py::arg("rho0"));
    mod.def("tn_p_moment", &tn_p_moment, py::arg("n"), py::arg("s"), py::arg("E"),
            py::arg("params"), py::arg("rho0"), py::arg("K"),
            py::arg("reg") = Regularization::finite_k);
    mod.def("p_even_moment", &p_even_moment, py::arg("s"), py::arg("E"),
            py::arg("params"), py::arg("rho0"));

    mod.def(
        "build_matrix",
        [](int power, int K, double E, const LatticeParams& p, Regularization reg,
           Rho0Source src) { return build_matrix(power, K, E, p, reg, src).entries; },
        py::arg("power"), py::arg("K"), py::arg("E"), py::arg("params"),
        py::arg("reg") = Regularization::finite_k,
        py::arg("rho0_source") = Rho0Source::analytic);
    mod.def(
        "is_psd",
        [](const Eigen::MatrixXd& M, double tol) {
            const auto r = is_psd(M, tol);
            return py::make_tuple(r.psd, r.min_eig);
        },
        py::arg("M"), py::arg("tol") = 1e-9);

    py::class_<ScanConfig>(mod, "ScanConfig")
        .def(py::init<>())
        .def_readwrite("params", &ScanConfig::params)
        .def_readwrite("K", &ScanConfig::K)
        .def_readwrite("power", &ScanConfig::power)
        .def_readwrite("e_lo", &ScanConfig::e_lo)
        .def_readwrite("e_hi", &ScanConfig::e_hi)
        .def_readwrite("e_step", &ScanConfig::e_step)
        .def_readwrite("tol", &ScanConfig::tol)
        .def_readwrite("reg", &ScanConfig::reg)
        .def_readwrite("rho0_source", &ScanConfig::rho0_source)
        .def_readwrite("refine_edges", &ScanConfig::refine_edges)
        .def_readwrite("threads", &ScanConfig::threads);

    mod.def(
        "scan",
        [](const ScanConfig& cfg) {
            const auto res = scan(cfg);
            py::dict out;
            py::list bands, gaps, points;
            for (const auto& b : res.spectrum.allowed)
                bands.append(py::make_tuple(b.lo, b.hi));
            for (const auto& g : res.spectrum.gaps)
                gaps.append(py::make_tuple(g.index, g.width));
            for (const auto& pt : res.points)
                points.append(py::make_tuple(pt.E, pt.allowed, pt.min_eig));
            out["bands"] = bands;
            out["gaps"] = gaps;
            out["points"] = points;
            if (res.spectrum.unbounded_below)
                out["e_min"] = py::str("unbounded-below");
            else if (res.spectrum.e_min)
                out["e_min"] = py::float_(*res.spectrum.e_min);
            else
                out["e_min"] = py::none();
            return out;
        },
        py::arg("config"));
    mod.def(
        "min_allowed_energy",
        [](const ScanConfig& cfg) { return min_energy_to_py(min_allowed_energy(cfg)); },
        py::arg("config"));
    mod.def("x2_moment", &x2_moment, py::arg("E"), py::arg("params"), py::arg("K"));
    mod.def("heisenberg_min_energy", &heisenberg_min_energy, py::arg("params"),
            py::arg("K"), py::arg("grid"));

    mod.def("cos_ka_series", &cos_ka_series, py::arg("E"), py::arg("params"), py::arg("N"));
    mod.def("cos_ka_series_adaptive", &cos_ka_series_adaptive, py::arg("E"),
            py::arg("params"), py::arg("tol") = 1e-10);
    mod.def(
        "dispersion_curve",
        [](const BandInterval& band, const LatticeParams& p, int samples) {
            return dispersion_curve(band, p, samples).samples;
        },
        py::arg("band"), py::arg("params"), py::arg("samples"));

    mod.def("isw_moment", &isw_moment, py::arg("n"), py::arg("E"), py::arg("a"));
    mod.def("isw_moment_closed", &isw_moment_closed, py::arg("n"), py::arg("E"), py::arg("a"));
    mod.def("isw_fourier_mode", &isw_fourier_mode, py::arg("n"), py::arg("E"),
            py::arg("a"), py::arg("trunc") = 80);
    mod.def("isw_density", &isw_density, py::arg("x"), py::arg("m"), py::arg("a"));
    mod.def("isw_quantization_residual", &isw_quantization_residual, py::arg("E"),
            py::arg("a"), py::arg("nmax") = 3, py::arg("trunc") = 80);
    mod.def("kp_isw_limit_check", &kp_isw_limit_check, py::arg("n"), py::arg("params"),
            py::arg("delta"));
}
