#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dissection/json_io.hpp"
#include "dissection/morphism.hpp"
#include "dissection/primitives.hpp"
#include "dissection/suites.hpp"

namespace py = pybind11;
using namespace dissection;

namespace {

std::string element_json(const Element& e, const char* basis = "") {
  return element_to_json(e, basis).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the parameterized Hopf algebra of "
            "dissection diagrams. Elements travel as JSON strings to keep "
            "the rational arithmetic exact.";

  m.def("diagram_count",
        [](int n) { return enumerate_diagrams(n).size(); },
        py::arg("degree"));
  m.def("enumerate_diagrams",
        [](int n) {
          std::vector<std::string> out;
          for (const Diagram& d : enumerate_diagrams(n))
            out.push_back(format_diagram(d));
          return out;
        },
        py::arg("degree"));
  m.def("canonical_diagram",
        [](const std::string& text) {
          return format_diagram(parse_diagram(text));
        },
        py::arg("text"));
  m.def("canonical_tree",
        [](const std::string& text) { return format_tree(parse_tree(text)); },
        py::arg("text"));

  m.def("coproduct",
        [](const std::string& text) {
          return tensor_to_json(coproduct(parse_diagram(text))).dump();
        },
        py::arg("diagram"));
  m.def("antipode",
        [](const std::string& text) {
          return element_json(antipode(parse_diagram(text)));
        },
        py::arg("diagram"));
  m.def("prelie_circ",
        [](const std::string& l, const std::string& r) {
          return element_json(element_from_lincomb(prelie_circ_diagrams(
                                  parse_diagram(l), parse_diagram(r))),
                              "dual");
        },
        py::arg("left"), py::arg("right"));
  m.def("lie_bracket",
        [](const std::string& l, const std::string& r) {
          return element_json(element_from_lincomb(lie_bracket(
                                  parse_diagram(l), parse_diagram(r))),
                              "dual");
        },
        py::arg("left"), py::arg("right"));
  m.def("dual_product",
        [](const std::string& l, const std::string& r) {
          return element_json(
              dual_product(Element::of(parse_diagram(l)),
                           Element::of(parse_diagram(r))),
              "dual");
        },
        py::arg("left"), py::arg("right"));
  m.def("phi",
        [](const std::string& forest) {
          return element_json(element_from_sym(phi_forest(parse_forest(forest))),
                              "dual");
        },
        py::arg("forest"));

  m.def("primitive_dimension",
        [](int n, const std::string& x) {
          return primitive_dimension(n, parse_rational(x));
        },
        py::arg("degree"), py::arg("x"));
  m.def("cofree_reference",
        [](int n) { return cofree_reference(n).get_str(); },
        py::arg("degree"));

  m.def("run_suite", [](const std::string& suite) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const CheckResult& r : run_suite(suite))
      out.push_back({r.name, r.pass, r.detail});
    return out;
  });
  m.def("suite_names", &suite_names);
}
