// Python bindings. Reports come back as plain dicts/lists mirroring the
// CLI JSON schema exactly (including the convention that integers beyond
// 64 bits appear as decimal strings inside reports); polytope vertices
// and counts are converted to true Python integers of arbitrary size.

#include "ehrspan/constructions.hpp"
#include "ehrspan/ehrhart.hpp"
#include "ehrspan/idp.hpp"
#include "ehrspan/inequalities.hpp"
#include "ehrspan/io.hpp"
#include "ehrspan/lattice_algebra.hpp"
#include "ehrspan/polytope.hpp"
#include "ehrspan/upp.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace ehrspan;
using nlohmann::json;

namespace {

py::int_ int_to_py(const Int& x) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::list intvec_to_py(const IntVec& v) {
  py::list out;
  for (const Int& x : v) out.append(int_to_py(x));
  return out;
}

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case json::value_t::array: {
      py::list l;
      for (const json& e : j) l.append(json_to_py(e));
      return l;
    }
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

// Funnel Python coordinate values (int, str, Fraction, ...) through their
// string form into the same validating parsers the CLI uses.
json coordinates_to_json(const py::iterable& rows) {
  json out = json::array();
  for (const py::handle& row : rows) {
    json r = json::array();
    for (const py::handle& c : py::cast<py::iterable>(row))
      r.push_back(std::string(py::str(c)));
    out.push_back(std::move(r));
  }
  return out;
}

LatticePolytope make_polytope(long long dim, const py::iterable& vertices) {
  return polytope_from_json(json{{"dim", dim}, {"vertices", coordinates_to_json(vertices)}});
}

ProjectivePointSet make_set(const std::vector<long long>& weights,
                            const py::iterable& points) {
  return point_set_from_json(
      json{{"weights", weights}, {"points", coordinates_to_json(points)}});
}

py::list weights_of(const ProjectivePointSet& gamma) {
  py::list out;
  for (long long i = 0; i < gamma.space.n; ++i) out.append(1);
  for (long long a : gamma.space.weights) out.append(a);
  return out;
}

py::object check_families(const LatticePolytope& p, const std::string& family) {
  if (family != "all" && family != "stanley" && family != "strong" && family != "lower")
    throw std::invalid_argument("family must be one of all|stanley|strong|lower");
  HStarVector h = hstar_vector(p);
  json results = json::array();
  if (family == "all" || family == "stanley")
    results.push_back(inequality_report_to_json(check_stanley(h)));
  if (family == "all" || family == "strong") {
    InequalityReport rep = check_strong(h);
    rep.spanning = spanning_index(p).index == 1;
    results.push_back(inequality_report_to_json(rep));
  }
  if (family == "all" || family == "lower")
    for (const auto& rep : check_lower_bounds(p))
      results.push_back(inequality_report_to_json(rep));
  return json_to_py(results);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice-polytope invariants and Hilbert functions of weighted "
            "point sets";
  m.attr("__version__") = EHRSPAN_VERSION;

  py::class_<LatticePolytope>(m, "Polytope")
      .def(py::init(&make_polytope), py::arg("dim"), py::arg("vertices"),
           "Full-dimensional lattice polytope from generating points; duplicates "
           "and non-vertices are dropped.")
      .def_property_readonly("dim", &LatticePolytope::dim)
      .def_property_readonly("vertices",
                             [](const LatticePolytope& p) {
                               py::list out;
                               for (const IntVec& v : p.vertices())
                                 out.append(intvec_to_py(v));
                               return out;
                             })
      .def_property_readonly("facets",
                             [](const LatticePolytope& p) {
                               py::list out;
                               for (const Facet& f : p.facets().facets) {
                                 py::dict d;
                                 d["normal"] = intvec_to_py(f.normal);
                                 d["offset"] = int_to_py(f.offset);
                                 out.append(d);
                               }
                               return out;
                             })
      .def_property_readonly("warnings",
                             [](const LatticePolytope& p) { return p.warnings(); })
      .def(
          "lattice_points",
          [](const LatticePolytope& p, long long k) {
            py::list out;
            for (const IntVec& v : lattice_points_in_dilate(p, Int(k))) out.append(intvec_to_py(v));
            return out;
          },
          py::arg("k") = 1, "Lattice points of kP, lexicographically ascending.")
      .def(
          "count_lattice_points",
          [](const LatticePolytope& p, long long k) {
            return int_to_py(count_lattice_points(p, Int(k)));
          },
          py::arg("k") = 1)
      .def("interior_lattice_points",
           [](const LatticePolytope& p) {
             py::list out;
             for (const IntVec& v : interior_lattice_points(p)) out.append(intvec_to_py(v));
             return out;
           })
      .def("has_interior_lattice_point", &has_interior_lattice_point)
      .def("__repr__", [](const LatticePolytope& p) {
        return "<Polytope dim=" + std::to_string(p.dim()) + ", " +
               std::to_string(p.vertices().size()) + " vertices>";
      });

  // analyses; each dict mirrors the CLI results payload
  m.def(
      "hstar",
      [](const LatticePolytope& p) { return json_to_py(hstar_to_json(hstar_vector(p))); },
      py::arg("polytope"), "h*-vector, degree, and normalized volume.");
  m.def(
      "ehrhart_counts",
      [](const LatticePolytope& p, long long k_max) {
        return intvec_to_py(k_max < 0 ? ehrhart_counts(p) : ehrhart_counts(p, k_max));
      },
      py::arg("polytope"), py::arg("k_max") = -1,
      "Lattice point counts of kP for k = 0..k_max (default: k_max = dim).");
  m.def(
      "ehrhart_polynomial",
      [](const LatticePolytope& p) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::list out;
        for (const Rat& c : ehrhart_polynomial(p).coefficients)
          out.append(fraction(rational_to_string(c)));
        return out;
      },
      py::arg("polytope"),
      "Coefficients of the counting polynomial, constant term first, as Fractions.");
  m.def(
      "spanning",
      [](const LatticePolytope& p) {
        return json_to_py(lattice_info_to_json(spanning_index(p)));
      },
      py::arg("polytope"), "Index of the lattice generated by the polytope's points.");
  m.def(
      "coarsen", [](const LatticePolytope& p) { return coarsen(p); }, py::arg("polytope"),
      "The polytope rewritten against the lattice its own points span.");
  m.def(
      "idp",
      [](const LatticePolytope& p, long long k_max) {
        return json_to_py(idp_to_json(k_max > 0 ? is_idp(p, k_max) : is_idp(p)));
      },
      py::arg("polytope"), py::arg("k_max") = 0,
      "Integer decomposition verdict with the first undecomposable point.");
  m.def("check", &check_families, py::arg("polytope"), py::arg("family") = "all",
        "Inequality family reports (stanley / strong / lower bounds).");

  // constructions
  m.def("segment", &segment, py::arg("n"));
  m.def("cube", &cube, py::arg("d"));
  m.def("unimodular_simplex", &unimodular_simplex, py::arg("d"));
  m.def("reeve_simplex", &reeve_simplex, py::arg("r"));
  m.def("reeve_bipyramid", &reeve_bipyramid, py::arg("r"));
  m.def(
      "dilate",
      [](const LatticePolytope& p, long long c) { return dilate(p, Int(c)); },
      py::arg("polytope"), py::arg("c"));
  m.def("join", &join, py::arg("p"), py::arg("q"),
        "Free join: blocks at heights 0 and 1, dim = p.dim + q.dim + 1.");
  m.def("pyramid", &pyramid, py::arg("polytope"));
  m.def(
      "random_corpus",
      [](std::uint64_t seed, long long count, long long dim_min, long long dim_max,
         long long bound, const std::string& family) {
        CorpusSpec spec;
        spec.seed = seed;
        spec.count = count;
        spec.dim_range = {dim_min, dim_max};
        spec.coordinate_bound = bound;
        spec.family = family;
        return random_corpus(spec);
      },
      py::arg("seed"), py::arg("count"), py::arg("dim_min") = 2, py::arg("dim_max") = 3,
      py::arg("bound") = 6, py::arg("family") = "random_simplex",
      "Deterministic seeded corpus of random lattice polytopes.");

  py::class_<ProjectivePointSet>(m, "PointSet")
      .def(py::init(&make_set), py::arg("weights"), py::arg("points"),
           "Distinct points of a weighted projective space; weights list the "
           "degree of every variable (the 1s first), coordinates are exact "
           "rationals given as int, str, or Fraction.")
      .def_property_readonly("weights", &weights_of)
      .def_property_readonly("points",
                             [](const ProjectivePointSet& gamma) {
                               py::list out;
                               for (const ProjectivePoint& p : gamma.points) {
                                 py::list row;
                                 for (const Rat& c : p.coords)
                                   row.append(py::str(rational_to_string(c)));
                                 out.append(row);
                               }
                               return out;
                             })
      .def("hilbert", &hilbert_function, py::arg("ell"),
           "Rank of the degree-ell evaluation matrix.")
      .def("stabilization_degree", &stabilization_degree)
      .def("is_uniform_position",
           [](const ProjectivePointSet& gamma) {
             return json_to_py(upp_result_to_json(is_uniform_position(gamma)));
           })
      .def("check_upp_bound",
           [](const ProjectivePointSet& gamma, long long i, long long j) {
             return json_to_py(upp_bound_to_json(check_upp_bound(gamma, i, j)));
           },
           py::arg("i"), py::arg("j"))
      .def("check_min_formula",
           [](const ProjectivePointSet& gamma) {
             return json_to_py(min_formula_to_json(check_min_formula(gamma)));
           })
      .def("__len__",
           [](const ProjectivePointSet& gamma) { return gamma.points.size(); })
      .def("__repr__", [](const ProjectivePointSet& gamma) {
        return "<PointSet " + std::to_string(gamma.points.size()) + " points, " +
               std::to_string(gamma.space.total_vars()) + " variables>";
      });

  m.def(
      "random_point_set",
      [](const std::vector<long long>& weights, long long count, std::uint64_t seed,
         long long bound) {
        // route the weights through the shared validator, then draw
        ProjectivePointSet probe = make_set(
            weights, py::cast(std::vector<std::vector<long long>>{
                         std::vector<long long>(weights.size(), 1)}));
        return random_point_set(probe.space, count, seed, bound);
      },
      py::arg("weights"), py::arg("count"), py::arg("seed"), py::arg("bound") = 3,
      "Seeded random distinct rational points avoiding the forbidden locus.");
}
