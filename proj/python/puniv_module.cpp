#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "puniv/io.hpp"

namespace py = pybind11;

namespace {

puniv::json parse_doc(const std::string& text) {
  try {
    return puniv::json::parse(text);
  } catch (const puniv::json::exception& e) {
    throw puniv::input_error(std::string("document: ") + e.what());
  }
}

std::string universal(const std::string& p_doc, const std::string& q_doc, bool unital,
                      const std::string& order) {
  return puniv::render_report(puniv::report_universal(
      parse_doc(p_doc), parse_doc(q_doc), unital, puniv::parse_term_order(order)));
}

std::string verify(const std::string& doc) {
  return puniv::render_report(puniv::report_verify(parse_doc(doc)));
}

std::string bialgebra(const std::string& doc) {
  return puniv::render_report(puniv::report_bialgebra(parse_doc(doc)));
}

std::string endomorphisms(const std::string& doc, const std::string& field) {
  return puniv::render_report(puniv::report_endomorphisms(parse_doc(doc), field));
}

std::string automorphisms(const std::string& doc, const std::string& field) {
  return puniv::render_report(puniv::report_automorphisms(parse_doc(doc), field));
}

std::string gradings(const std::string& doc, const std::string& group,
                     const std::string& field, bool classify) {
  return puniv::render_report(
      puniv::report_gradings(parse_doc(doc), group, field, classify));
}

std::string tensor_module(const std::string& p_doc, const std::string& q_doc,
                          const std::string& u_doc, const std::string& v_doc) {
  return puniv::render_report(puniv::report_tensor_module(
      parse_doc(p_doc), parse_doc(q_doc), parse_doc(u_doc), parse_doc(v_doc)));
}

std::string presentation(const std::string& flavour, const std::string& p_doc,
                         const std::string& q_doc, const std::string& m_doc,
                         const std::string& w_doc) {
  return puniv::render_report(puniv::report_presentation(
      flavour, parse_doc(p_doc), parse_doc(q_doc), parse_doc(m_doc), parse_doc(w_doc)));
}

py::tuple run(const std::vector<std::string>& args) {
  puniv::CommandResult result = puniv::run_command(args);
  return py::make_tuple(result.exit_code, result.text);
}

}  // namespace

PYBIND11_MODULE(_puniv, m) {
  m.doc() = "exact universal constructions for finite-dimensional Poisson algebras";

  py::register_exception<puniv::input_error>(m, "InputError", PyExc_ValueError);
  py::register_exception<puniv::guard_error>(m, "GuardError", PyExc_RuntimeError);

  m.def("run", &run, py::arg("args"),
        "Run a CLI invocation (argv without the program name); returns "
        "(exit_code, report_text).");
  m.def("verify", &verify, py::arg("algebra"),
        "Poisson-axiom report for an algebra document (JSON text in, JSON text out).");
  m.def("universal", &universal, py::arg("p"), py::arg("q"), py::arg("unital") = false,
        py::arg("order") = "degrevlex",
        "Reduced presentation of the universal algebra of the pair (P, Q).");
  m.def("bialgebra", &bialgebra, py::arg("algebra"),
        "Universal coacting bialgebra report for P(P).");
  m.def("endomorphisms", &endomorphisms, py::arg("algebra"), py::arg("field") = "",
        "Poisson endomorphisms over a finite field.");
  m.def("automorphisms", &automorphisms, py::arg("algebra"), py::arg("field") = "",
        "Poisson automorphism group over a finite field.");
  m.def("gradings", &gradings, py::arg("algebra"), py::arg("group"), py::arg("field") = "",
        py::arg("classify") = false, "Group gradings over a finite field.");
  m.def("tensor_module", &tensor_module, py::arg("p"), py::arg("q"), py::arg("u"),
        py::arg("v"), "Induced Poisson Q-module structure on U (x) V.");
  m.def("presentation", &presentation, py::arg("flavour"), py::arg("p"), py::arg("q"),
        py::arg("m"), py::arg("w"),
        "Generators-and-relations presentation of the universal modules.");
}
