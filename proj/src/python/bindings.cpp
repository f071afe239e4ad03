#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hensel/cli/commands.hpp"
#include "hensel/cli/parser.hpp"
#include "hensel/etale.hpp"
#include "hensel/hensel.hpp"
#include "hensel/linalg.hpp"

namespace py = pybind11;
using namespace hensel;

namespace {

NewtonSystem make_system(const Field& field, const std::vector<std::string>& variables,
                         const std::vector<std::string>& system, const std::vector<std::string>& point) {
  NewtonSystem s{field, {}, {}};
  for (const auto& text : system) s.polys.push_back(cli::parse_poly(text, variables, field));
  for (const auto& text : point) s.point.push_back(cli::parse_element(text, field));
  return s;
}

ExactPoly univariate(const Field& field, const std::string& text, const std::string& variable) {
  return cli::parse_poly(text, {variable}, field).to_uni();
}

std::string digit_text(const mpq_class& d) { return BaseField::format(d); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Hensel lifting over p-adic and t-adic fields";

  static py::exception<Error> error_type(m, "HenselError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string message = std::string(error_code_name(e.code())) + ": " + e.what();
      PyErr_SetString(error_type.ptr(), message.c_str());
    }
  });

  py::class_<Field>(m, "Field")
      .def_static("padic", &Field::padic, py::arg("p"))
      .def_static("tadic", [](long p) {
        return Field::tadic(p == 0 ? BaseField::rationals() : BaseField::prime_field(p));
      }, py::arg("characteristic") = 0)
      .def_static("parse", [](const std::string& d) { return cli::parse_field(d); }, py::arg("descriptor"))
      .def_property_readonly("descriptor", &Field::descriptor)
      .def_property_readonly("is_padic", &Field::is_padic)
      .def("__eq__", [](const Field& a, const Field& b) { return a == b; })
      .def("__repr__", [](const Field& f) { return "Field('" + f.descriptor() + "')"; });

  py::class_<Truncated>(m, "Truncated")
      .def_property_readonly("precision", &Truncated::precision)
      .def_property_readonly("digits", [](const Truncated& x) {
        std::vector<std::string> out;
        for (const auto& d : x.digits()) out.push_back(digit_text(d));
        return out;
      })
      .def_property_readonly("residue", [](const Truncated& x) { return x.integer_residue().get_str(); })
      .def("__str__", &Truncated::to_string)
      .def("__eq__", [](const Truncated& a, const Truncated& b) { return a == b; });

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text, const Field& f) { return cli::parse_element(text, f); }),
           py::arg("text"), py::arg("field"))
      .def("valuation", [](const Element& x) -> std::optional<long> {
        const ExtValuation v = x.valuation();
        if (v.is_infinite()) return std::nullopt;
        return v.value();
      })
      .def("is_unit", &Element::is_unit)
      .def("in_valuation_ring", &Element::in_valuation_ring)
      .def("in_maximal_ideal", &Element::in_maximal_ideal)
      .def("residue", [](const Element& x) { return x.residue().to_string(); })
      .def("truncate", &Element::truncate, py::arg("precision"))
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__truediv__", [](const Element& a, const Element& b) { return a / b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__str__", &Element::to_string);

  m.def("hensel_lift", [](const Field& f, const std::string& poly, const std::string& a, long n, const std::string& var) {
    return hensel_lift(HenselCode{univariate(f, poly, var), cli::parse_element(a, f)}, n);
  }, py::arg("field"), py::arg("poly"), py::arg("point"), py::arg("precision"), py::arg("variable") = "x");

  m.def("herve_lift", [](const Field& f, const std::string& poly, long n, const std::string& var) {
    return herve_lift(univariate(f, poly, var), n);
  }, py::arg("field"), py::arg("poly"), py::arg("precision"), py::arg("variable") = "x");

  m.def("hensel_newton", [](const Field& f, const std::string& poly, long n, const std::string& var) {
    return hensel_newton(univariate(f, poly, var), n);
  }, py::arg("field"), py::arg("poly"), py::arg("precision"), py::arg("variable") = "x");

  m.def("refine_root", [](const Field& f, const std::string& poly, const std::string& a, long n, const std::string& var) {
    return refine_root(univariate(f, poly, var), cli::parse_element(a, f), n);
  }, py::arg("field"), py::arg("poly"), py::arg("point"), py::arg("precision"), py::arg("variable") = "x");

  m.def("newton_solve", [](const Field& f, const std::vector<std::string>& variables,
                           const std::vector<std::string>& system, const std::vector<std::string>& point, long n) {
    const NewtonSystem s = make_system(f, variables, system, point);
    NewtonResult r = newton_solve(s, n);
    const bool valid = verify_certificate(s, r.certificate).valid;
    return py::make_tuple(r.zero, cli::certificate_to_json(r.certificate).dump(), valid);
  }, py::arg("field"), py::arg("variables"), py::arg("system"), py::arg("point"), py::arg("precision"),
     "Returns (zero, certificate JSON text, certificate verified).");

  m.def("discriminant", [](const Field& f, const std::string& poly, const std::string& var) {
    return discriminant(univariate(f, poly, var));
  }, py::arg("field"), py::arg("poly"), py::arg("variable") = "x");

  m.def("trace_determinant", [](const Field& f, const std::string& poly, const std::string& var) {
    return det(trace_matrix(univariate(f, poly, var)).trace_matrix);
  }, py::arg("field"), py::arg("poly"), py::arg("variable") = "x");

  m.def("run_json", [](const std::string& text, std::optional<std::string> command) {
    cli::RunResult r;
    {
      py::gil_scoped_release release;
      r = cli::run_text(text, command);
    }
    return py::make_tuple(cli::render(r.document), r.exit_code);
  }, py::arg("text"), py::arg("command") = py::none(),
     "Runs one CLI job given as JSON text; returns (output text, exit code).");

  m.def("run_batch_json", [](const std::string& text, unsigned threads, std::optional<std::string> command) {
    cli::RunResult r;
    {
      py::gil_scoped_release release;
      const cli::json docs = cli::json::parse(text, nullptr, false);
      r = docs.is_discarded()
              ? cli::RunResult{cli::error_document("batch", "SCHEMA_ERROR", "unparsable batch"), cli::kExitUsage}
              : cli::run_batch(docs, threads, command);
    }
    return py::make_tuple(cli::render(r.document), r.exit_code);
  }, py::arg("text"), py::arg("threads") = 1, py::arg("command") = py::none());

  m.attr("SCHEMA_VERSION") = cli::kSchemaVersion;
}
