// Python bindings for the main operations: bound evaluation, the sharp
// constants, verification, and the application integrals.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sincbounds/constants.hpp"
#include "sincbounds/means.hpp"
#include "sincbounds/quadrature.hpp"
#include "sincbounds/report.hpp"
#include "sincbounds/version.hpp"

namespace py = pybind11;
using namespace sincbounds;

PYBIND11_MODULE(_sincbounds, m) {
    m.doc() = "sharp bounds for sin(x)/x and related means";
    m.attr("__version__") = std::string(version_string);

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("sinc", [](double x) { return sinc(x); }, py::arg("x"));
    m.def("cos_power", [](double p, double x) { return cos_power(p, x); },
          py::arg("p"), py::arg("x"));
    m.def("f_p", [](double p, double x) { return f_p(p, x); },
          py::arg("p"), py::arg("x"));
    m.def("big_f", [](double p, double x) { return big_f(p, x); },
          py::arg("p"), py::arg("x"));
    m.def("big_f_limit_zero", [](double p) { return big_f_limit_zero(p); },
          py::arg("p"));
    m.def("big_f_limit_half_pi",
          [](double p) { return big_f_limit_half_pi(p); }, py::arg("p"));
    m.def("beta", [](double p, double c) { return beta(p, c); },
          py::arg("p"), py::arg("c"));

    m.def("solve_p0", [](double tol) { return solve_p0(tol).value; },
          py::arg("tol") = 1e-13);

    py::class_<ConstantCatalogue>(m, "ConstantCatalogue")
        .def_readonly("p0", &ConstantCatalogue::p0)
        .def_readonly("alpha", &ConstantCatalogue::alpha)
        .def_readonly("beta_13_half", &ConstantCatalogue::beta_13_half)
        .def_readonly("beta_13_quarter", &ConstantCatalogue::beta_13_quarter)
        .def_readonly("beta_12_half", &ConstantCatalogue::beta_12_half)
        .def_readonly("a2_lower", &ConstantCatalogue::a2_lower)
        .def_readonly("a2_upper", &ConstantCatalogue::a2_upper)
        .def_readonly("a31_lower", &ConstantCatalogue::a31_lower)
        .def_readonly("a31_upper", &ConstantCatalogue::a31_upper)
        .def_readonly("a32_lower", &ConstantCatalogue::a32_lower)
        .def_readonly("a32_upper", &ConstantCatalogue::a32_upper);
    m.def("catalogue", &catalogue);

    m.def("si", &si, py::arg("x"));
    m.def("catalan_reference", &catalan_reference);
    m.def("schwab_borchardt", &schwab_borchardt, py::arg("a"), py::arg("b"));
    m.def("a4_margin", &a4_margin, py::arg("t"));
    m.def("a5_margin", &a5_margin, py::arg("a"), py::arg("b"));

    py::class_<CaseRecord>(m, "CaseRecord")
        .def_readonly("id", &CaseRecord::id)
        .def_readonly("claim", &CaseRecord::claim)
        .def_readonly("status", &CaseRecord::status)
        .def_readonly("min_margin", &CaseRecord::min_margin)
        .def_readonly("argmin", &CaseRecord::argmin)
        .def_readonly("witness", &CaseRecord::witness)
        .def_readonly("evaluations", &CaseRecord::evaluations)
        .def_readonly("expected_met", &CaseRecord::expected_met);

    py::class_<ReportDocument>(m, "ReportDocument")
        .def_readonly("tool_version", &ReportDocument::tool_version)
        .def_readonly("precision_mode", &ReportDocument::precision_mode)
        .def_readonly("cases", &ReportDocument::cases)
        .def("all_expectations_met", &ReportDocument::all_expectations_met);

    m.def(
        "run_report",
        [](const std::string& suite, int grid) {
            return run_report(parse_suite(suite), grid);
        },
        py::arg("suite") = "all", py::arg("grid") = 256);
    m.def("emit_machine", &emit_machine, py::arg("report"));
    m.def("emit_text", &emit_text, py::arg("report"));
}
