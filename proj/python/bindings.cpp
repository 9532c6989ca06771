#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "irc/bounds.hpp"
#include "irc/channel.hpp"
#include "irc/fdf.hpp"
#include "irc/gdof.hpp"
#include "irc/slope.hpp"
#include "irc/sweep.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m)
{
    m.doc() = "GDoF of the symmetric Gaussian interference relay channel";

    auto base = py::register_exception<irc::Error>(m, "IrcError", PyExc_RuntimeError);
    py::register_exception<irc::DomainError>(m, "DomainError", base);
    py::register_exception<irc::RegimeError>(m, "RegimeError", base);
    py::register_exception<irc::DegenerateChannelError>(m, "DegenerateChannelError", base);
    py::register_exception<irc::InfeasibleAllocationError>(m, "InfeasibleAllocationError", base);

    py::class_<irc::StrengthExponents>(m, "StrengthExponents")
        .def(py::init([](double a, double b, double g) {
                 return irc::StrengthExponents{a, b, g};
             }),
             py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
        .def_readwrite("alpha", &irc::StrengthExponents::alpha)
        .def_readwrite("beta", &irc::StrengthExponents::beta)
        .def_readwrite("gamma", &irc::StrengthExponents::gamma)
        .def("__repr__", [](const irc::StrengthExponents& e) { return irc::to_string(e); });

    py::class_<irc::LinearChannel>(m, "LinearChannel")
        .def(py::init([](double hd, double hc, double hr, double hsr, double p) {
                 return irc::LinearChannel{hd, hc, hr, hsr, p};
             }),
             py::arg("h_d") = 1.0, py::arg("h_c") = 0.0, py::arg("h_r") = 0.0,
             py::arg("h_sr") = 0.0, py::arg("power") = 1.0)
        .def_readwrite("h_d", &irc::LinearChannel::h_d)
        .def_readwrite("h_c", &irc::LinearChannel::h_c)
        .def_readwrite("h_r", &irc::LinearChannel::h_r)
        .def_readwrite("h_sr", &irc::LinearChannel::h_sr)
        .def_readwrite("power", &irc::LinearChannel::power)
        .def("__repr__", [](const irc::LinearChannel& ch) {
            std::ostringstream os;
            os << "LinearChannel(h_d=" << ch.h_d << ", h_c=" << ch.h_c << ", h_r=" << ch.h_r
               << ", h_sr=" << ch.h_sr << ", power=" << ch.power << ")";
            return os.str();
        });

    m.def("capacity", &irc::capacity, py::arg("x"));
    m.def("capacity_plus", &irc::capacity_plus, py::arg("x"));
    m.def("realize", &irc::realize, py::arg("exponents"), py::arg("snr"));
    m.def("recover_exponents", &irc::recover_exponents, py::arg("channel"));

    py::class_<irc::GdofBreakdown>(m, "GdofBreakdown")
        .def_readonly("args", &irc::GdofBreakdown::args)
        .def_readonly("value", &irc::GdofBreakdown::value)
        .def_readonly("argmin_index", &irc::GdofBreakdown::argmin_index);
    m.def("gdof_irc", &irc::gdof_irc, py::arg("exponents"));
    m.def("gdof_min_arguments", &irc::gdof_min_arguments, py::arg("exponents"));
    m.def("gdof_ic", &irc::gdof_ic, py::arg("alpha"));

    py::class_<irc::BoundReport>(m, "BoundReport")
        .def_readonly("cutset_bc", &irc::BoundReport::cutset_bc)
        .def_readonly("cutset_mac", &irc::BoundReport::cutset_mac)
        .def_readonly("genie_1", &irc::BoundReport::genie_1)
        .def_readonly("genie_2", &irc::BoundReport::genie_2)
        .def_readonly("tightest", &irc::BoundReport::tightest)
        .def_readonly("tightest_name", &irc::BoundReport::tightest_name);
    m.def("cutset_bounds", &irc::cutset_bounds, py::arg("channel"));
    m.def("genie_bound_1", &irc::genie_bound_1, py::arg("channel"));
    m.def("genie_bound_2", &irc::genie_bound_2, py::arg("channel"));
    m.def("bound_report", &irc::bound_report, py::arg("channel"));

    py::enum_<irc::Variant>(m, "Variant")
        .value("WEAK", irc::Variant::Weak)
        .value("STRONG", irc::Variant::Strong);

    py::class_<irc::PowerAllocation>(m, "PowerAllocation")
        .def(py::init([](double pp, double pc, std::vector<double> cp, double r1, double r2) {
                 return irc::PowerAllocation{pp, pc, std::move(cp), r1, r2};
             }),
             py::arg("p_private") = 0.0, py::arg("p_common") = 0.0,
             py::arg("p_cp") = std::vector<double>{0.0}, py::arg("p_relay_1") = 0.0,
             py::arg("p_relay_2") = 0.0)
        .def_readwrite("p_private", &irc::PowerAllocation::p_private)
        .def_readwrite("p_common", &irc::PowerAllocation::p_common)
        .def_readwrite("p_cp", &irc::PowerAllocation::p_cp)
        .def_readwrite("p_relay_1", &irc::PowerAllocation::p_relay_1)
        .def_readwrite("p_relay_2", &irc::PowerAllocation::p_relay_2)
        .def_property_readonly("levels", &irc::PowerAllocation::levels);

    py::class_<irc::RateBreakdown>(m, "RateBreakdown")
        .def_readonly("variant", &irc::RateBreakdown::variant)
        .def_readonly("r_private", &irc::RateBreakdown::r_private)
        .def_readonly("r_common", &irc::RateBreakdown::r_common)
        .def_readonly("r_cp_levels", &irc::RateBreakdown::r_cp_levels)
        .def_readonly("r_cp_total", &irc::RateBreakdown::r_cp_total)
        .def_readonly("sum_rate", &irc::RateBreakdown::sum_rate);

    py::class_<irc::BestRate>(m, "BestRate")
        .def_readonly("rates", &irc::BestRate::rates)
        .def_readonly("allocation", &irc::BestRate::allocation)
        .def_readonly("variant", &irc::BestRate::variant);

    m.def("weak_rates", &irc::weak_rates, py::arg("channel"), py::arg("allocation"));
    m.def("strong_rates", &irc::strong_rates, py::arg("channel"), py::arg("allocation"));
    m.def("example_allocation", &irc::example_allocation, py::arg("channel"));
    m.def("in_ladder_regime", &irc::in_ladder_regime, py::arg("exponents"));
    m.def("cp_ladder_check", &irc::cp_ladder_check, py::arg("channel"), py::arg("allocation"));
    m.def("best_sum_rate", &irc::best_sum_rate, py::arg("channel"), py::arg("k_max") = 4,
          py::arg("resolution") = 8);

    py::class_<irc::SlopeEstimate>(m, "SlopeEstimate")
        .def_readonly("ladder", &irc::SlopeEstimate::ladder)
        .def_readonly("slopes", &irc::SlopeEstimate::slopes)
        .def_readonly("final_slope", &irc::SlopeEstimate::final_slope)
        .def_readonly("converged", &irc::SlopeEstimate::converged);
    m.def(
        "estimate_slope",
        [](const irc::RateFunction& fn, const irc::StrengthExponents& e,
           const std::vector<double>& ladder, double tol) {
            return irc::estimate_slope(fn, e, ladder, tol);
        },
        py::arg("rate_fn"), py::arg("exponents"), py::arg("ladder") = irc::default_snr_ladder(),
        py::arg("tol") = 0.1);

    py::class_<irc::SweepRow>(m, "SweepRow")
        .def_readonly("alpha", &irc::SweepRow::alpha)
        .def_readonly("d_formula", &irc::SweepRow::d_formula)
        .def_readonly("d_ic", &irc::SweepRow::d_ic)
        .def_readonly("d_converse_numeric", &irc::SweepRow::d_converse_numeric)
        .def_readonly("d_fdf_numeric", &irc::SweepRow::d_fdf_numeric)
        .def_readonly("argmin", &irc::SweepRow::argmin);
    m.def(
        "sweep",
        [](double beta, double gamma, double alpha_min, double alpha_max, int steps,
           std::vector<double> ladder, int k_max, int resolution) {
            irc::SweepOptions o;
            o.beta = beta;
            o.gamma = gamma;
            o.alpha_min = alpha_min;
            o.alpha_max = alpha_max;
            o.steps = steps > 0 ? steps : irc::default_sweep_steps(alpha_min, alpha_max);
            o.snr_ladder = std::move(ladder);
            o.k_max = k_max;
            o.resolution = resolution;
            py::gil_scoped_release release;
            return irc::compute_sweep(o);
        },
        py::arg("beta"), py::arg("gamma"), py::arg("alpha_min"), py::arg("alpha_max") = 2.5,
        py::arg("steps") = 0, py::arg("snr_ladder") = irc::default_snr_ladder(),
        py::arg("k_max") = 3, py::arg("resolution") = 6);
    m.def("sweep_csv", [](const std::vector<irc::SweepRow>& rows) {
        std::ostringstream os;
        irc::write_sweep_csv(os, rows);
        return os.str();
    });
}
