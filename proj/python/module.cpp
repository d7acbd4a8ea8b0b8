#include "tdesc/bundled.hpp"
#include "tdesc/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tdesc;

namespace {

ToricData load_fan(const std::string& text) { return prepare(fan_from_json(parse_json_text(text))); }

std::string lattice_op(const std::string& op, const std::string& text, std::optional<int> degree,
                       std::optional<std::size_t> subgroup) {
  GLattice l = glattice_from_json(parse_json_text(text));
  if (op == "cohomology") return cohomology_report(l, degree, subgroup).dump();
  if (op == "flasque") return flasque_report(l).dump();
  if (op == "coflasque") return coflasque_report(l).dump();
  if (op == "resolve") return resolution_report(l).dump();
  if (op == "invertible") return invertible_report(l).dump();
  if (op == "kernel") return global_kernel_report(l).dump();
  throw std::invalid_argument("unknown lattice operation " + op);
}

}  // namespace

PYBIND11_MODULE(_tdesc, m) {
  m.doc() = "JSON-in, JSON-out bindings of the toric descent library";
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("analyze", [](const std::string& fan) { return analysis_report(load_fan(fan)).dump(); }, py::arg("fan_json"));
  m.def(
      "forms",
      [](const std::string& fan, const std::string& field) {
        return forms_report(load_fan(fan), parse_model(field)).dump();
      },
      py::arg("fan_json"), py::arg("field") = "real");
  m.def(
      "forms_with_model",
      [](const std::string& fan, const std::string& model) {
        return forms_report(load_fan(fan), abstract_model_from_json(parse_json_text(model))).dump();
      },
      py::arg("fan_json"), py::arg("model_json"));
  m.def("lattice", &lattice_op, py::arg("op"), py::arg("lattice_json"), py::arg("degree") = py::none(),
        py::arg("subgroup") = py::none());
  m.def(
      "omega",
      [](const std::string& fan, std::optional<std::vector<std::vector<long>>> classes) {
        std::optional<std::vector<IntVector>> cls;
        if (classes) {
          cls.emplace();
          for (const auto& c : *classes) cls->emplace_back(c.begin(), c.end());
        }
        return omega_report(load_fan(fan), cls).dump();
      },
      py::arg("fan_json"), py::arg("classes") = py::none());
  m.def("nef", [](const std::string& fan) { return nef_report(load_fan(fan)).dump(); }, py::arg("fan_json"));
  m.def(
      "h0",
      [](const std::string& fan, const std::vector<long>& divisor) {
        return h0_report(load_fan(fan), IntVector(divisor.begin(), divisor.end())).dump();
      },
      py::arg("fan_json"), py::arg("divisor"));
  m.def("examples", [] { return bundled_names(""); });
  m.def(
      "example",
      [](const std::string& name) {
        auto text = bundled_file(name);
        if (!text) throw py::key_error(name);
        return *text;
      },
      py::arg("name"));
}
