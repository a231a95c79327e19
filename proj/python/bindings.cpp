#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ranstrat/errors.hpp"
#include "ranstrat/io.hpp"

namespace py = pybind11;
using namespace ranstrat;

namespace {

PointConfig config_of(const std::vector<Point>& points) {
  if (points.empty()) throw ValidationError("a configuration needs at least one point");
  return PointConfig(points.front().size(), points);
}

CechOptions options(std::optional<std::size_t> max_dim, double eps_geo) {
  CechOptions o;
  o.max_dim = max_dim;
  o.eps_geo = eps_geo;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cech complexes, the domination poset and the Cech stratification";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def(py::init([](std::size_t n, const std::vector<Simplex>& generators) { return make_complex(n, generators); }),
           py::arg("n_vertices"), py::arg("generators") = std::vector<Simplex>{})
      .def_property_readonly("n_vertices", &SimplicialComplex::n_vertices)
      .def_property_readonly("simplices", &SimplicialComplex::simplices)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def("facets", &SimplicialComplex::facets)
      .def("is_subcomplex_of", &SimplicialComplex::is_subcomplex_of)
      .def("__len__", &SimplicialComplex::size)
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& c) { return "SimplicialComplex(" + facet_string(c) + ")"; })
      .def("to_json", [](const SimplicialComplex& c) { return io::to_json(c).dump(); });

  m.def("canonical_key", [](const SimplicialComplex& c) { return canonical_form(c).key(); });
  m.def("canonical_form", [](const SimplicialComplex& c) { return canonical_form(c).canonical(); });
  m.def("are_isomorphic", [](const SimplicialComplex& a, const SimplicialComplex& b) { return are_isomorphic(a, b); });
  m.def(
      "dominates",
      [](const SimplicialComplex& a, const SimplicialComplex& b) -> std::optional<std::vector<Vertex>> {
        if (auto w = dominates(a, b)) return w->vertex_map();
        return std::nullopt;
      },
      "Vertex map of a vertex-surjective simplicial map a -> b, or None.");

  m.def(
      "enumerate_json",
      [](std::size_t n_max) { return io::to_json(enumerate_classes(n_max)).dump(); }, py::arg("n_max"));
  m.def(
      "hasse_json",
      [](std::size_t n_max) { return io::to_json(hasse(enumerate_classes(n_max))).dump(); }, py::arg("n_max"));
  m.def(
      "hasse_dot", [](std::size_t n_max) { return export_dot(hasse(enumerate_classes(n_max))); },
      py::arg("n_max"));

  m.def(
      "meb",
      [](const std::vector<Point>& points) {
        const Ball b = meb(config_of(points));
        return py::make_tuple(b.center, b.radius);
      },
      "Center and radius of the smallest enclosing ball.");
  m.def("hausdorff", [](const std::vector<Point>& p, const std::vector<Point>& q) {
    return hausdorff(config_of(p), config_of(q));
  });

  m.def(
      "cech_complex",
      [](const std::vector<Point>& points, double radius, std::optional<std::size_t> max_dim, double eps_geo) {
        return cech_complex(RanPoint(config_of(points), radius), options(max_dim, eps_geo));
      },
      py::arg("points"), py::arg("radius"), py::arg("max_dim") = py::none(), py::arg("eps_geo") = kEpsGeo);
  m.def(
      "cech_filtration_json",
      [](const std::vector<Point>& points, std::optional<std::size_t> max_dim, double eps_geo) {
        return io::to_json(cech_filtration(config_of(points), options(max_dim, eps_geo))).dump();
      },
      py::arg("points"), py::arg("max_dim") = py::none(), py::arg("eps_geo") = kEpsGeo);

  m.def(
      "stratum_json",
      [](const std::vector<Point>& points, double radius, double eps_geo) {
        const RanPoint x(config_of(points), radius);
        const CechOptions o = options(std::nullopt, eps_geo);
        return io::to_json(stratum_label(x, o), tilde_r(x, o)).dump();
      },
      py::arg("points"), py::arg("radius"), py::arg("eps_geo") = kEpsGeo);
  m.def(
      "local_map",
      [](const std::vector<Point>& q, double s, const std::vector<Point>& p, double r) {
        return local_map(RanPoint(config_of(q), s), RanPoint(config_of(p), r)).vertex_map();
      },
      py::arg("from_points"), py::arg("from_radius"), py::arg("to_points"), py::arg("to_radius"));

  m.def(
      "zigzag_json",
      [](const std::string& path_json, double resolution, bool with_filtration) {
        const PLPath path = io::path_from_json(io::parse(path_json));
        const ZigzagDiagram z = zigzag(path, resolution);
        io::Json j = io::to_json(z);
        if (with_filtration) {
          const auto chain = as_filtration(z);
          j["filtration"] = chain ? io::to_json(*chain) : io::Json(nullptr);
        }
        return j.dump();
      },
      py::arg("path_json"), py::arg("resolution") = kDefaultResolution, py::arg("as_filtration") = false);
  m.def(
      "cech_path_json",
      [](const std::vector<Point>& points, double t_max) { return io::to_json(cech_path(config_of(points), t_max)).dump(); },
      py::arg("points"), py::arg("t_max"));

  m.def(
      "frontier_demo_json",
      [](std::size_t samples, double probe_radius, std::uint64_t seed) {
        const PointConfig p(1, {{0.0}, {1.0}});
        const IsoClass a = canonical_form(cech_complex(RanPoint(p, 0.4)));
        const IsoClass b = canonical_form(cech_complex(RanPoint(p, 0.6)));
        return io::to_json(frontier_check(two_point_line_family(), a, b, LabelMode::coarse, samples, probe_radius, seed))
            .dump();
      },
      py::arg("samples") = 10000, py::arg("probe_radius") = 0.05, py::arg("seed") = 0);
}
