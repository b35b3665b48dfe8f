#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cellfrob/report.hpp"

namespace py = pybind11;

namespace {

std::string report_json(const std::string& spec_text) {
    auto input = cellfrob::parse_spec(spec_text);
    auto res = cellfrob::run_report(input);
    return res.doc.dump(2) + "\n";
}

std::string validate_json(const std::string& spec_text) {
    auto input = cellfrob::parse_spec(spec_text);
    cellfrob::ReportOptions opts;
    opts.full = false;
    return cellfrob::run_report(input, opts).doc.dump(2) + "\n";
}

std::string report_human(const std::string& spec_text) {
    auto input = cellfrob::parse_spec(spec_text);
    return cellfrob::render_human(cellfrob::run_report(input).doc);
}

std::string builtin_json(const std::string& name, const std::map<std::string, std::string>& params) {
    return cellfrob::serialize_spec(cellfrob::builtin_fixture(name, params));
}

std::string oracle_json(const std::string& spec_text, const std::string& cell,
                        const std::string& flavor) {
    auto input = cellfrob::parse_spec(spec_text);
    return cellfrob::oracle_report(input, cell, flavor).dump(2) + "\n";
}

std::string roundtrip_json(const std::string& spec_text) {
    return cellfrob::serialize_spec(cellfrob::parse_spec(spec_text));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verification of Frobenius cellular algebras";

    py::register_exception<cellfrob::ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<cellfrob::ValidationError>(m, "SpecValidationError", PyExc_ValueError);
    py::register_exception<cellfrob::ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

    m.def("builtin", &builtin_json, py::arg("name"),
          py::arg("params") = std::map<std::string, std::string>{},
          "Serialize a builtin fixture (koenig-xi, dual-numbers, matrix) as spec JSON");
    m.def("report", &report_json, py::arg("spec_text"),
          "Run the full pipeline and return the machine report as a JSON string");
    m.def("report_text", &report_human, py::arg("spec_text"),
          "Run the full pipeline and return the human-readable report");
    m.def("validate", &validate_json, py::arg("spec_text"),
          "Run the axiom checks only and return the (partial) report as JSON");
    m.def("oracle", &oracle_json, py::arg("spec_text"), py::arg("cell"), py::arg("flavor") = "C",
          "Run both projectivity oracles on one cell module");
    m.def("roundtrip", &roundtrip_json, py::arg("spec_text"),
          "Parse and re-serialize a spec (canonical form)");
}
