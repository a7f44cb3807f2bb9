#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "erq/commands.hpp"
#include "erq/error.hpp"
#include "erq/parser.hpp"
#include "erq/run_log.hpp"

namespace py = pybind11;
using namespace erq;

namespace {

// Every call returns a JSON document as text; the Python package decodes it.

std::vector<std::string> names_or_default(const std::optional<std::vector<std::string>>& variables,
                                          const std::string& text, std::size_t min_arity) {
  return variables ? *variables : infer_variables(text, min_arity);
}

std::string dump(const Json& j) { return j.dump(); }

Json parse_doc(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid JSON argument: ") + e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Native core of the erq package";

  // Later registrations are tried first, so the subclass comes second.
  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  m.def("parse", [](const std::string& text, std::optional<std::vector<std::string>> variables) {
    return dump(parse_command(text, names_or_default(variables, text, 1)));
  }, py::arg("text"), py::arg("variables") = py::none());

  m.def("classify", [](const std::string& text, std::optional<std::vector<std::string>> variables) {
    return dump(classify_command(text, names_or_default(variables, text, 2)));
  }, py::arg("text"), py::arg("variables") = py::none());

  m.def("decompose", [](const std::string& text, std::optional<std::vector<std::string>> variables) {
    return dump(decompose_command(text, names_or_default(variables, text, 2)));
  }, py::arg("text"), py::arg("variables") = py::none());

  m.def("recompose", [](const std::string& certificate) {
    const Json j = parse_doc(certificate);
    return format_polynomial(recompose(certificate_from_json(j)), certificate_variables(j));
  }, py::arg("certificate"));

  m.def("image_size", [](const std::string& text, const std::string& sets,
                         std::optional<std::vector<std::string>> variables, unsigned threads) {
    py::gil_scoped_release release;
    return dump(image_command(text, names_or_default(variables, text, 1), parse_doc(sets), {threads, 0}));
  }, py::arg("text"), py::arg("sets"), py::arg("variables") = py::none(), py::arg("threads") = 1);

  m.def("growth_sweep", [](const std::string& text, const std::string& sets, std::vector<std::size_t> ns,
                           std::optional<std::vector<std::string>> variables) {
    py::gil_scoped_release release;
    return dump(sweep_command(text, names_or_default(variables, text, 1), parse_doc(sets), ns));
  }, py::arg("text"), py::arg("sets"), py::arg("ns"), py::arg("variables") = py::none());

  m.def("fiber_check", [](const std::string& text, const std::string& sets,
                          std::optional<std::vector<std::string>> variables) {
    return dump(fiber_command(text, names_or_default(variables, text, 2), parse_doc(sets)));
  }, py::arg("text"), py::arg("sets"), py::arg("variables") = py::none());

  m.def("set_op", [](const std::string& op, const std::string& sets) {
    return dump(set_op_command(op, parse_doc(sets)));
  }, py::arg("op"), py::arg("sets"));

  m.def("witness", [](const std::string& text, std::size_t n, std::optional<std::vector<std::string>> variables,
                      bool literal_sets) {
    py::gil_scoped_release release;
    return dump(witness_command(text, names_or_default(variables, text, 2), n, literal_sets));
  }, py::arg("text"), py::arg("n"), py::arg("variables") = py::none(), py::arg("literal_sets") = false);

  m.def("chang", [](std::size_t n) {
    py::gil_scoped_release release;
    return dump(chang_command(n));
  }, py::arg("n"));

  m.def("rational_root", [](const std::string& r, unsigned w) { return dump(root_probe(Rational::parse(r), w)); },
        py::arg("r"), py::arg("w"));
  m.def("heights", [](unsigned long height) { return dump(heights_probe(height)); }, py::arg("height"));
  m.def("curve_points", [](const std::string& g, unsigned w, unsigned long height, const std::string& c) {
    return dump(curve_probe(g, Rational::parse(c), w, height));
  }, py::arg("g"), py::arg("w"), py::arg("height"), py::arg("c") = "1");
  m.def("genus", [](const std::string& g) { return dump(genus_probe(g)); }, py::arg("g"));
  m.def("membership", [](const std::string& r, const std::string& generators) {
    return dump(membership_probe(Rational::parse(r), parse_rational_list(generators)));
  }, py::arg("r"), py::arg("generators"));
  m.def("intersection", [](const std::string& g, const std::string& generators, unsigned long height) {
    py::gil_scoped_release release;
    return dump(intersection_probe(g, parse_rational_list(generators), height));
  }, py::arg("g"), py::arg("generators"), py::arg("height"));
  m.def("pigeonhole", [](const std::string& vectors, long w) {
    return dump(pigeonhole_probe(w, parse_doc(vectors), 0, 0));
  }, py::arg("vectors"), py::arg("w"));
  m.def("progression", [](const std::string& values, const std::string& kind) {
    return dump(progression_probe(kind, rationals_from_json(parse_doc(values))));
  }, py::arg("values"), py::arg("kind"));
  m.def("range_probe", [](const std::string& g, const std::string& domain, unsigned long bound,
                          const std::string& kind, std::optional<std::string> shift) {
    std::optional<Rational> s;
    if (shift) s = Rational::parse(*shift);
    return dump(range_probe(g, domain, bound, kind, s));
  }, py::arg("g"), py::arg("domain"), py::arg("bound"), py::arg("kind"), py::arg("shift") = py::none());
  m.def("squares", [](unsigned long n) { return dump(squares_probe(n)); }, py::arg("n"));

  m.def("record_experiment", [](const std::string& path, const std::string& entry) {
    return record_experiment(path, parse_doc(entry));
  }, py::arg("path"), py::arg("entry"));
}
