#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mnf/canonical.hpp"
#include "mnf/constructions.hpp"
#include "mnf/enumerator.hpp"
#include "mnf/errors.hpp"
#include "mnf/homology.hpp"
#include "mnf/io.hpp"
#include "mnf/lcm_lattice.hpp"
#include "mnf/nerve.hpp"

namespace py = pybind11;
using namespace mnf;

namespace {

// Python sees 1-based labels, like the file format.
std::vector<std::vector<int>> label_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : sets) out.push_back(s.labels());
  return out;
}

VertexSet from_py(const std::vector<int>& labels) { return VertexSet::from_labels(labels); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "MnfError", PyExc_ValueError);

  py::class_<MnfComplex>(m, "Complex")
      .def(py::init(&MnfComplex::from_labels), py::arg("n"), py::arg("mnf"))
      .def_static("from_facets",
                  [](int n, const std::vector<std::vector<int>>& fs) {
                    std::vector<VertexSet> sets;
                    for (const auto& f : fs) sets.push_back(from_py(f));
                    return MnfComplex::from_facets(n, sets);
                  })
      .def_static("parse", py::overload_cast<const std::string&>(&parse_complex))
      .def_property_readonly("n", &MnfComplex::n)
      .def_property_readonly("m", &MnfComplex::m)
      .def_property_readonly("mnf", [](const MnfComplex& c) {
        return label_lists({c.mnf().begin(), c.mnf().end()});
      })
      .def_property_readonly("dim", [](const MnfComplex& c) { return dimension(c); })
      .def_property_readonly("alpha", [](const MnfComplex& c) { return alpha(c); })
      .def("facets", [](const MnfComplex& c) { return label_lists(facets(c)); })
      .def("f_vector", [](const MnfComplex& c) { return f_vector(c); })
      .def("is_face", [](const MnfComplex& c, const std::vector<int>& s) { return is_face(c, from_py(s)); })
      .def("format", [](const MnfComplex& c) { return format_complex(c); })
      .def("__eq__", [](const MnfComplex& a, const MnfComplex& b) { return a == b; })
      .def("__repr__", [](const MnfComplex& c) { return "Complex(" + to_string(c) + ")"; });

  m.def("join", &join);
  m.def("one_point_suspension", [](const MnfComplex& c, int v) { return one_point_suspension(c, v - 1); },
        py::arg("c"), py::arg("vertex"));
  m.def("two_point_suspension", &two_point_suspension);
  m.def("simplex_boundary", &simplex_boundary);
  m.def("cross_polytope", &cross_polytope);
  m.def("pd_sphere", &pd_sphere);
  m.def("cyclic_boundary", &cyclic_boundary, py::arg("d"), py::arg("n"));
  m.def("codim3_sphere", &codim3_sphere);
  m.def("cross_minus_facet", &cross_minus_facet);

  m.def("canonical_key", [](const MnfComplex& c) { return canonical_key(c).hex(); });
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "reduced_betti", [](const MnfComplex& c, const std::string& f) { return reduced_betti(c, FieldSpec::parse(f)).dims; },
      py::arg("c"), py::arg("field") = "gf2");
  m.def(
      "is_homology_sphere",
      [](const MnfComplex& c, const std::string& f) { return is_homology_sphere(c, FieldSpec::parse(f)); },
      py::arg("c"), py::arg("field") = "gf2");
  m.def(
      "betti_totals", [](const MnfComplex& c, const std::string& f) { return betti_table(c, FieldSpec::parse(f)).totals(); },
      py::arg("c"), py::arg("field") = "gf2");
  m.def("duality_violations", [](const MnfComplex& c) { return check_duality(c).size(); });

  m.def("nerve_facets", [](const MnfComplex& c) { return label_lists(nerve(c).facets); });
  m.def("is_point_separating", &is_point_separating);
  m.def("is_join_irreducible", &is_join_irreducible);
  m.def("unsuspend", [](const MnfComplex& c) { return unsuspend(c).reduced; });
  m.def("nerve_dot", &nerve_dot);

  m.def(
      "_analyze",
      [](const MnfComplex& c, const std::string& f, bool lcm) {
        return analysis_report(c, {FieldSpec::parse(f), lcm}).dump();
      },
      py::arg("c"), py::arg("field") = "gf2", py::arg("lcm") = true);
  m.def("_census", [](const std::string& config_json) {
    CensusConfig cfg = CensusConfig::from_json(nlohmann::json::parse(config_json));
    std::vector<std::string> records;
    std::string summary;
    {
      py::gil_scoped_release release;
      auto s = enumerate(cfg, [&](const CensusRecord& r) { records.push_back(r.to_json().dump()); });
      summary = s.to_json().dump();
    }
    return py::make_tuple(records, summary);
  });
  m.def("_default_census_config", [] { return CensusConfig{}.to_json().dump(); });
}
