#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "billiard/deformation.hpp"
#include "billiard/errors.hpp"
#include "billiard/invariants.hpp"
#include "billiard/json_io.hpp"
#include "billiard/symunion.hpp"

namespace py = pybind11;
using namespace billiard;

namespace {

py::object to_python(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

Json from_python(const py::handle& obj) {
  py::module_ json = py::module_::import("json");
  return Json::parse(json.attr("dumps")(obj).cast<std::string>());
}

BilliardParams make_params(const std::string& geometry, int s, int n, int m, const std::optional<std::string>& phase,
                           const std::optional<double>& beta) {
  BilliardParams p;
  p.geometry = parse_geometry(geometry);
  p.s = s;
  p.n = n;
  p.m = m;
  if (phase) p.phase = parse_rational(*phase);
  if (p.geometry == Geometry::Cylinder) p.beta = beta ? *beta : default_cylinder_beta(s, n);
  return p;
}

KnotDiagram make_diagram(const std::string& geometry, int s, int n, int m, const std::optional<std::string>& phase,
                         const std::optional<double>& beta, bool stable) {
  if (stable) return build_stable_diagram(s, n, m);
  return build_diagram(make_params(geometry, s, n, m, phase, beta));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Billiard knot diagrams, invariants and deformation analysis";
  m.attr("__version__") = BILLIARD_VERSION;

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NoValidPhaseError>(m, "NoValidPhaseError", PyExc_RuntimeError);
  py::register_exception<DegenerateProjectionError>(m, "DegenerateProjectionError", PyExc_RuntimeError);
  py::register_exception<SingularPhaseError>(m, "SingularPhaseError", PyExc_RuntimeError);
  py::register_exception<UnsupportedLinkError>(m, "UnsupportedLinkError", PyExc_RuntimeError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("sawtooth", [](const std::string& t) { return to_string(sawtooth(parse_rational(t))); }, py::arg("t"),
        "Exact g(t) for a rational given as 'p/q'; returns 'p/q'.");
  m.def("sawtooth_float", py::overload_cast<double>(&sawtooth), py::arg("t"));
  m.def("x_l", &x_l, py::arg("beta"), py::arg("l"), py::arg("s"), py::arg("n"));
  m.def("default_cylinder_beta", &default_cylinder_beta, py::arg("s"), py::arg("n"));

  m.def(
      "diagram",
      [](const std::string& geometry, int s, int n, int m, std::optional<std::string> phase, std::optional<double> beta,
         bool stable) { return to_python(diagram_to_json(make_diagram(geometry, s, n, m, phase, beta, stable))); },
      py::arg("geometry"), py::arg("s"), py::arg("n"), py::arg("m"), py::arg("phase") = py::none(),
      py::arg("beta") = py::none(), py::arg("stable") = false, "Diagram as a dict with params, pd, gauss and signs.");

  m.def(
      "invariants",
      [](const std::string& geometry, int s, int n, int m, std::optional<std::string> phase, std::optional<double> beta,
         bool stable) {
        return to_python(invariants_to_json(compute_invariants(make_diagram(geometry, s, n, m, phase, beta, stable))));
      },
      py::arg("geometry"), py::arg("s"), py::arg("n"), py::arg("m"), py::arg("phase") = py::none(),
      py::arg("beta") = py::none(), py::arg("stable") = false);

  m.def(
      "invariants_of",
      [](const py::handle& diagram) {
        return to_python(invariants_to_json(compute_invariants(diagram_from_json(from_python(diagram)))));
      },
      py::arg("diagram"), "Invariants of a diagram dict (PD code with optional signs).");

  m.def(
      "alexander",
      [](const std::string& geometry, int s, int n, int m, bool stable) {
        const auto a = alexander_polynomial(make_diagram(geometry, s, n, m, std::nullopt, std::nullopt, stable));
        return a.to_string();
      },
      py::arg("geometry"), py::arg("s"), py::arg("n"), py::arg("m"), py::arg("stable") = false);

  m.def(
      "classify_stability",
      [](int s, int n, int m, int grid) { return to_python(profile_to_json(classify_stability(s, n, m, grid))); },
      py::arg("s"), py::arg("n"), py::arg("m"), py::arg("grid") = kDefaultGridSize);

  m.def(
      "deformation_csv",
      [](int s, int n, int m, int grid) {
        std::ostringstream out;
        write_deformation_csv(deformation_graph(s, n, m, grid), out);
        return out.str();
      },
      py::arg("s"), py::arg("n"), py::arg("m"), py::arg("grid") = kDefaultGridSize);

  m.def(
      "decompose",
      [](const std::string& family, int s, int n, int m) {
        const bool is_r = family == "R" || family == "cube";
        if (!is_r && family != "T" && family != "flat-torus") throw ParameterError("family must be R or T");
        const auto u = is_r ? decompose_R(s, n, m) : decompose_T(s, n, m);
        Json j = decomposition_to_json(u);
        j["det"] = determinant(u.diagram);
        j["partial_det"] = determinant(u.partial);
        j["partial_alexander"] = alexander_polynomial(u.partial).to_string();
        return to_python(j);
      },
      py::arg("family"), py::arg("s"), py::arg("n"), py::arg("m"));

  m.def("perfect_square_root", &perfect_square_root, py::arg("k"));
}
