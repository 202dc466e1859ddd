#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dessin/cycle_notation.hpp"
#include "dessin/errors.hpp"
#include "dessin/graph_model.hpp"
#include "dessin/oracle.hpp"
#include "dessin/reroute.hpp"

namespace py = pybind11;
using namespace dessin;

namespace {

ElementLabel label(const std::string& s) { return ElementLabel::parse(s); }

std::vector<std::string> names(const std::vector<ElementLabel>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Permutation pairs, reroute surgery and the conjugation calculus";

  auto error = py::register_exception<Error>(m, "DessinError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<DegenerateError>(m, "DegenerateError", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<PermutationPair>(m, "Pair")
      .def(py::init([](const std::string& white, const std::string& black, std::optional<std::uint32_t> degree) {
             return parse_pair(white, black, degree);
           }),
           py::arg("white"), py::arg("black"), py::arg("degree") = py::none())
      .def_property_readonly("white", [](const PermutationPair& p) { return p.white().to_string(); })
      .def_property_readonly("black", [](const PermutationPair& p) { return p.black().to_string(); })
      .def_property_readonly("product", [](const PermutationPair& p) { return p.product().to_string(); })
      .def_property_readonly("ground", [](const PermutationPair& p) { return names(p.ground().elements()); })
      .def("__len__", &PermutationPair::size)
      .def("__eq__", &PermutationPair::operator==)
      .def("__repr__", [](const PermutationPair& p) {
        return "Pair('" + p.white().to_string() + "', '" + p.black().to_string() + "')";
      })
      .def_property_readonly("chi", &euler_characteristic)
      .def_property_readonly("genus", &synthetic_genus)
      .def_property_readonly("transitive", &is_transitive)
      .def("analyze",
           [](const PermutationPair& p) {
             PairReport r = analyze(p);
             py::dict d;
             d["chi"] = r.chi;
             d["genus"] = r.genus;
             d["nu_white"] = r.nu_white;
             d["nu_black"] = r.nu_black;
             d["nu_product"] = r.nu_product;
             d["transitive"] = r.transitive;
             return d;
           })
      .def("classify_type",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return to_string(classify_type(p, label(a), label(b)));
           })
      .def("classify_exceptional",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return to_string(classify_exceptional(p, label(a), label(b)));
           })
      .def("genus_effect",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return to_string(genus_effect(p, label(a), label(b)));
           })
      .def("predict_branch_type",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return to_string(predict_branch_type(p, label(a), label(b)));
           })
      .def("reroute",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return reroute(p, label(a), label(b)).pair;
           })
      .def("double_reroute",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return double_reroute(p, label(a), label(b));
           })
      .def("conjugate",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return conjugate_by_transposition(p, label(a), label(b));
           })
      .def("delete_edge", [](const PermutationPair& p, const std::string& e) { return delete_edge(p, label(e)); })
      .def("boundary_walk",
           [](const PermutationPair& p, const std::string& e) { return names(boundary_walk(p, label(e))); })
      .def("wild_walk_criterion",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return wild_walk_criterion(p, label(a), label(b));
           })
      .def("tame_walk_criterion",
           [](const PermutationPair& p, const std::string& a, const std::string& b) {
             return tame_walk_criterion(p, label(a), label(b));
           })
      .def("components", [](const PermutationPair& p) { return num_components(build_model(p)); })
      .def("to_dot", [](const PermutationPair& p) { return export_dot(build_model(p)); });

  m.def(
      "verify",
      [](std::uint32_t degree, unsigned threads, std::uint64_t samples, std::uint64_t seed) {
        VerifyOptions o;
        o.degree = degree;
        o.threads = threads;
        o.samples = samples;
        o.seed = seed;
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_all(o);
        }
        return py::module_::import("json").attr("loads")(r.to_json());
      },
      py::arg("degree") = 4, py::arg("threads") = 1, py::arg("samples") = 2000, py::arg("seed") = 1);
  m.def("verify_tree_case", [](std::uint32_t max_edges) {
    return py::module_::import("json").attr("loads")(verify_tree_case(max_edges).to_json());
  });
}
