#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amalg/harness.hpp"
#include "amalg/session.hpp"

namespace py = pybind11;

namespace {

amalg::Session parse(const std::string& text, std::optional<std::uint32_t> prime, int max_degree,
                     std::vector<std::string> assume_equidim) {
  amalg::SessionOptions options;
  options.prime = prime;
  options.max_degree = max_degree;
  options.assume_equidim = std::move(assume_equidim);
  return amalg::Session::parse(text, options);
}

py::dict report_dict(const amalg::Report& r) {
  py::dict d;
  for (const auto& [k, v] : r.lines) d[py::str(k)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pyamalg, m) {
  m.doc() = "Amalgamated algebras along an ideal";

  static py::exception<amalg::Error> amalg_error(m, "AmalgError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const amalg::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(amalg_error.ptr())(e.what());
      exc.attr("code") = std::string(amalg::errc_name(e.code()));
      PyErr_SetObject(amalg_error.ptr(), exc.ptr());
    }
  });

  py::class_<amalg::Report>(m, "Report")
      .def_readonly("lines", &amalg::Report::lines)
      .def_readonly("notes", &amalg::Report::notes)
      .def_readonly("exit_status", &amalg::Report::exit_status)
      .def("value", &amalg::Report::value)
      .def("as_dict", &report_dict)
      .def("__str__", &amalg::Report::to_string);

  py::class_<amalg::Session>(m, "Session")
      .def_property_readonly("prime", &amalg::Session::prime)
      .def_property_readonly("declaration_count", &amalg::Session::declaration_count)
      .def("has", &amalg::Session::has)
      .def("run", [](const amalg::Session& s, const std::string& cmd) { return s.run(cmd); })
      .def("present", &amalg::Session::present)
      .def("classify", &amalg::Session::classify_report)
      .def("canonical", &amalg::Session::canonical)
      .def("hom_into", &amalg::Session::hom_into)
      .def("finite_check", &amalg::Session::finite_check);

  m.def("parse", &parse, py::arg("text"), py::arg("prime") = std::nullopt, py::arg("max_degree") = 8,
        py::arg("assume_equidim") = std::vector<std::string>{});
  m.def(
      "classify",
      [](const amalg::Session& s, const std::string& name) { return report_dict(s.classify_report(name)); },
      py::arg("session"), py::arg("name"));
  m.def(
      "verify_paper", [](std::uint32_t prime, int max_degree) { return amalg::verify_paper(prime, max_degree).to_report(); },
      py::arg("prime") = 101, py::arg("max_degree") = 8);
}
