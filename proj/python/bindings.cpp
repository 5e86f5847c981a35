#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poncelet/checks.hpp"
#include "poncelet/family.hpp"
#include "poncelet/io.hpp"
#include "poncelet/loci.hpp"

namespace py = pybind11;
using namespace poncelet;

namespace {

using XY = std::pair<double, double>;

XY xy(Point p) { return {p.x, p.y}; }

}  // namespace

PYBIND11_MODULE(_poncelet, m) {
  m.doc() = "Poncelet triangle families between nested ellipses";

  static py::exception<Error> error(m, "PonceletError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<PonceletConfig>(m, "Config")
      .def(py::init(&make_config), py::arg("a"), py::arg("b"), py::arg("f"), py::arg("g"))
      .def_static("circular_caustic", &config_circular_caustic, py::arg("a"), py::arg("b"), py::arg("xc"),
                  py::arg("yc"))
      .def_readonly("a", &PonceletConfig::a)
      .def_readonly("b", &PonceletConfig::b)
      .def_readonly("f", &PonceletConfig::f)
      .def_readonly("g", &PonceletConfig::g)
      .def_property_readonly("caustic_center", [](const PonceletConfig& c) { return xy(c.caustic_center()); })
      .def_property_readonly("caustic_radius", [](const PonceletConfig& c) -> std::optional<double> {
        if (!c.circular) return std::nullopt;
        return c.circular->radius;
      })
      .def("to_json", [](const PonceletConfig& c) { return config_to_json(c).dump(); })
      .def("__repr__", [](const PonceletConfig& c) { return "Config(" + config_to_json(c).dump() + ")"; });

  m.def(
      "triangle", [](const PonceletConfig& cfg, double theta) {
        const Triangle T = triangle_at(cfg, theta);
        return std::vector<XY>{xy(T.A()), xy(T.B()), xy(T.C())};
      },
      py::arg("config"), py::arg("theta"));

  m.def(
      "caustic", [](const PonceletConfig& cfg) {
        const EllipseSpec e = caustic_recover(cfg);
        return py::dict(py::arg("center") = xy(e.center), py::arg("semi_major") = e.semi_major,
                        py::arg("semi_minor") = e.semi_minor, py::arg("rotation") = e.rotation);
      },
      py::arg("config"));

  m.def(
      "x4_locus", [](const PonceletConfig& cfg) {
        const OrthoLocusSpec s = predict_x4_locus(cfg);
        return py::dict(py::arg("center") = xy(s.C4), py::arg("a4") = s.a4, py::arg("b4") = s.b4,
                        py::arg("sigma") = s.sigma);
      },
      py::arg("config"));

  m.def(
      "isog_circle", [](Complex f, Complex g, Complex P) {
        const IsogCircleSpec s = predict_isog_circle(f, g, P);
        return std::make_pair(s.O_dag, s.r_dag);
      },
      py::arg("f"), py::arg("g"), py::arg("P"));

  m.def(
      "region", [](const PonceletConfig& cfg, double x, double y) {
        return std::string(to_string(region_membership(cfg, {x, y}).membership));
      },
      py::arg("config"), py::arg("x"), py::arg("y"));

  m.def(
      "center_locus", [](const PonceletConfig& cfg, int k, int samples) {
        std::vector<XY> out;
        for (const Point& p : sample_locus(cfg, LocusTarget::center_of(k), samples).defined_points())
          out.push_back(xy(p));
        return out;
      },
      py::arg("config"), py::arg("k"), py::arg("samples") = 64);

  m.def(
      "isogonal_locus", [](const PonceletConfig& cfg, double x, double y, int samples) {
        std::vector<XY> out;
        for (const Point& p : sample_locus(cfg, LocusTarget::isogonal_of({x, y}), samples).defined_points())
          out.push_back(xy(p));
        return out;
      },
      py::arg("config"), py::arg("x"), py::arg("y"), py::arg("samples") = 64);

  m.def("check_names", &check_names);
  m.def(
      "run_check_json", [](const std::string& name, int trials, std::uint64_t seed) {
        CheckOptions opts;
        opts.trials = trials;
        opts.seed = seed;
        py::gil_scoped_release release;
        return to_json(run_check(name, opts)).dump();
      },
      py::arg("name"), py::arg("trials") = 0, py::arg("seed") = CheckOptions{}.seed);
}
