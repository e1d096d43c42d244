#include "abideal/duality.hpp"
#include "abideal/graded_oracle.hpp"
#include "abideal/ideals.hpp"
#include "abideal/json_io.hpp"
#include "abideal/rootsys.hpp"
#include "abideal/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace abideal;

namespace {

py::list roots_to_py(const std::vector<Root>& roots) {
  py::list out;
  for (const Root& r : roots) out.append(r.c);
  return out;
}

py::dict ideal_to_py(const RootSystem& rs, const AbelianIdeal& ideal) {
  py::dict d;
  d["type"] = rs.type().name();
  d["roots"] = roots_to_py(ideal.roots);
  d["word"] = ideal.word.letters;
  d["long"] = is_long_ideal(rs, ideal);
  d["rootlet"] = ideal.empty() ? py::object(py::none()) : py::cast(rootlet(rs, ideal).c);
  d["generators"] = roots_to_py(generators(rs, ideal));
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Abelian ideals of Borel subalgebras: exact enumeration, long-ideal "
            "classification, and little-adjoint duality checks";

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init([](const std::string& type) {
             return RootSystem::build(SimpleType::parse(type));
           }),
           py::arg("type"))
      .def_property_readonly("type", [](const RootSystem& rs) { return rs.type().name(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("length_ratio", &RootSystem::length_ratio_d)
      .def_property_readonly("long_simple_count", &RootSystem::long_simple_count_a)
      .def_property_readonly("coxeter_number", &RootSystem::coxeter_number)
      .def_property_readonly("theta", [](const RootSystem& rs) { return rs.theta().c; })
      .def_property_readonly("theta_s",
                             [](const RootSystem& rs) -> py::object {
                               if (!rs.theta_s()) return py::none();
                               return py::cast(rs.theta_s()->c);
                             })
      .def_property_readonly("cartan", [](const RootSystem& rs) { return rs.cartan(); })
      .def("positive_roots",
           [](const RootSystem& rs) {
             std::vector<std::vector<int>> out;
             for (const Root& r : rs.positive_roots()) out.push_back(r.c);
             return out;
           })
      .def("is_long",
           [](const RootSystem& rs, const std::vector<int>& coeffs) {
             return rs.is_long(Root{coeffs});
           })
      .def("long_ideal_count_formula",
           [](const RootSystem& rs) {
             const auto f = rs.long_ideal_count_formula();
             return py::make_tuple(f.ratio, f.power);
           })
      .def("dualize", &RootSystem::dualize)
      .def("__repr__",
           [](const RootSystem& rs) { return "<RootSystem " + rs.type().name() + ">"; });

  m.def(
      "ideals",
      [](const std::string& type) {
        const RootSystem rs = RootSystem::build(SimpleType::parse(type));
        py::list out;
        for (const AbelianIdeal& ideal : enumerate_ideals(rs)) out.append(ideal_to_py(rs, ideal));
        return out;
      },
      py::arg("type"), "All Abelian ideals with their minuscule words");

  m.def(
      "long_ideals",
      [](const std::string& type) {
        const RootSystem rs = RootSystem::build(SimpleType::parse(type));
        py::list out;
        for (const AbelianIdeal& ideal : long_ideals(rs)) out.append(ideal_to_py(rs, ideal));
        return out;
      },
      py::arg("type"), "Long Abelian ideals; their number is d^(#Pi_l)");

  m.def(
      "duality_report",
      [](const std::string& type) {
        const Json j = duality_report_to_json(verify_duality_bijection(SimpleType::parse(type)));
        py::module_ json = py::module_::import("json");
        return json.attr("loads")(j.dump());
      },
      py::arg("type"), "Long ideals vs Borel-stable commutative subalgebras on the dual side");

  m.def(
      "verify",
      [](const std::string& type) {
        py::list out;
        for (const CheckResult& c : verify_type(SimpleType::parse(type))) {
          py::dict d;
          d["name"] = c.name;
          d["type"] = c.type;
          d["pass"] = c.pass;
          d["detail"] = c.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("type"), "Run the invariant suite for one type");

  m.def("gl_count", &gl_count, py::arg("n"), py::arg("r"));
  m.def("gl_formula", &gl_formula, py::arg("n"), py::arg("r"));
  m.def("gl_verify", &gl_verify, py::arg("n"), py::arg("r"));

#ifdef ABIDEAL_VERSION
  m.attr("__version__") = ABIDEAL_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
