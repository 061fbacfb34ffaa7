#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lcroots/errors.hpp"
#include "lcroots/figure.hpp"
#include "lcroots/literal.hpp"
#include "lcroots/properties.hpp"
#include "lcroots/quadratic.hpp"
#include "lcroots/report.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

PyObject* lc_error_type = nullptr;

void translate_lc_error(std::exception_ptr p) {
  try {
    if (p) std::rethrow_exception(p);
  } catch (const lcroots::LcError& e) {
    std::string msg(lcroots::to_string(e.code()));
    if (auto cls = e.degeneracy()) msg += "(" + std::string(lcroots::to_string(*cls)) + ")";
    msg += ": ";
    msg += e.what();
    PyErr_SetString(lc_error_type, msg.c_str());
  }
}

lcroots::QuadraticCoefficients coeffs_of(lcroots::Complex c1, lcroots::Complex c2) {
  return {c1, c2};
}

}  // namespace

PYBIND11_MODULE(_lcroots, m) {
  m.doc() = "Roots of complex quadratics as line/circle intersections";

  static py::exception<lcroots::LcError> exc(m, "LcError", PyExc_ValueError);
  lc_error_type = exc.ptr();
  py::register_exception_translator(&translate_lc_error);

  py::enum_<lcroots::Degeneracy>(m, "Degeneracy")
      .value("Regular", lcroots::Degeneracy::Regular)
      .value("DoubleRoot", lcroots::Degeneracy::DoubleRoot)
      .value("ZeroRoot", lcroots::Degeneracy::ZeroRoot)
      .value("LineThroughOrigin", lcroots::Degeneracy::LineThroughOrigin);

  py::class_<lcroots::Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("collinear", &lcroots::Tolerances::collinear)
      .def_readwrite("degenerate", &lcroots::Tolerances::degenerate)
      .def_readwrite("tangent", &lcroots::Tolerances::tangent)
      .def_readwrite("root", &lcroots::Tolerances::root)
      .def_readwrite("bisector", &lcroots::Tolerances::bisector);

  py::class_<lcroots::ParametricLine>(m, "ParametricLine")
      .def(py::init<lcroots::Complex, lcroots::Complex>(), "fixed_point"_a, "direction"_a)
      .def_readonly("fixed_point", &lcroots::ParametricLine::fixed_point)
      .def_readonly("direction", &lcroots::ParametricLine::direction)
      .def("at", &lcroots::ParametricLine::at, "t"_a);

  py::class_<lcroots::Circle>(m, "Circle")
      .def(py::init<lcroots::Complex, double>(), "center"_a, "radius"_a)
      .def_readonly("center", &lcroots::Circle::center)
      .def_readonly("radius", &lcroots::Circle::radius);

  py::class_<lcroots::LcConstruction>(m, "LcConstruction")
      .def_readonly("p1", &lcroots::LcConstruction::p1)
      .def_readonly("v_d", &lcroots::LcConstruction::v_d)
      .def_readonly("theta_star", &lcroots::LcConstruction::theta_star)
      .def_readonly("line", &lcroots::LcConstruction::line)
      .def_readonly("w1", &lcroots::LcConstruction::w1)
      .def_readonly("w2", &lcroots::LcConstruction::w2)
      .def_readonly("circle", &lcroots::LcConstruction::circle);

  py::class_<lcroots::RootReport>(m, "RootReport")
      .def_readonly("r1", &lcroots::RootReport::r1)
      .def_readonly("r2", &lcroots::RootReport::r2)
      .def_readonly("residual1", &lcroots::RootReport::residual1)
      .def_readonly("residual2", &lcroots::RootReport::residual2)
      .def_readonly("construction", &lcroots::RootReport::construction)
      .def_readonly("line_parameters", &lcroots::RootReport::line_parameters)
      .def_readonly("polish_applied", &lcroots::RootReport::polish_applied)
      .def_readonly("fallback_used", &lcroots::RootReport::fallback_used);

  py::class_<lcroots::MatchResult>(m, "MatchResult")
      .def_readonly("crossed", &lcroots::MatchResult::crossed)
      .def_readonly("max_abs_error", &lcroots::MatchResult::max_abs_error)
      .def_readonly("max_rel_error", &lcroots::MatchResult::max_rel_error);

  py::class_<lcroots::MobiusReport>(m, "MobiusReport")
      .def_readonly("fitted_circle", &lcroots::MobiusReport::fitted_circle)
      .def_readonly("max_radial_residual", &lcroots::MobiusReport::max_radial_residual)
      .def_readonly("origin_gap", &lcroots::MobiusReport::origin_gap)
      .def_readonly("tail_magnitude", &lcroots::MobiusReport::tail_magnitude);

  py::class_<lcroots::SimilarityReport>(m, "SimilarityReport")
      .def_readonly("ratio_a", &lcroots::SimilarityReport::ratio_a)
      .def_readonly("ratio_b", &lcroots::SimilarityReport::ratio_b)
      .def_readonly("ratio_c", &lcroots::SimilarityReport::ratio_c)
      .def_readonly("expected_ratio", &lcroots::SimilarityReport::expected_ratio)
      .def_readonly("angle_left", &lcroots::SimilarityReport::angle_left)
      .def_readonly("angle_right", &lcroots::SimilarityReport::angle_right)
      .def_readonly("root_index", &lcroots::SimilarityReport::root_index);

  m.def("argument", &lcroots::argument, "z"_a);
  m.def("unit_direction", &lcroots::unit_direction, "theta"_a);
  m.def("circle_through_origin", &lcroots::circle_through_origin, "w1"_a, "w2"_a,
        "tol"_a = lcroots::Tolerances{});
  m.def(
      "intersect_line_circle",
      [](const lcroots::ParametricLine& line, const lcroots::Circle& circle) {
        py::list out;
        for (const auto& p : lcroots::intersect_line_circle(line, circle)) {
          out.append(py::make_tuple(p.t, p.point));
        }
        return out;
      },
      "line"_a, "circle"_a, "List of (t, point) pairs ordered by t.");

  m.def(
      "classify",
      [](lcroots::Complex c1, lcroots::Complex c2) { return lcroots::classify(coeffs_of(c1, c2)); },
      "c1"_a, "c2"_a);
  m.def(
      "compute_theta",
      [](lcroots::Complex c1, lcroots::Complex c2) {
        return lcroots::compute_theta(coeffs_of(c1, c2));
      },
      "c1"_a, "c2"_a);
  m.def(
      "theta_via_bisection",
      [](lcroots::Complex c1, lcroots::Complex c2) {
        return lcroots::theta_via_bisection(coeffs_of(c1, c2));
      },
      "c1"_a, "c2"_a);
  m.def(
      "build_construction",
      [](lcroots::Complex c1, lcroots::Complex c2) {
        return lcroots::build_construction(coeffs_of(c1, c2));
      },
      "c1"_a, "c2"_a);
  m.def(
      "solve",
      [](lcroots::Complex c1, lcroots::Complex c2, bool polish, const lcroots::Tolerances& tol) {
        lcroots::SolveOptions opts;
        opts.polish = polish;
        opts.tol = tol;
        return lcroots::solve(coeffs_of(c1, c2), opts);
      },
      "c1"_a, "c2"_a, "polish"_a = true, "tol"_a = lcroots::Tolerances{},
      "Roots of x^2 + c1 x + c2 as the line/circle intersections.");
  m.def(
      "quadratic_formula",
      [](lcroots::Complex c1, lcroots::Complex c2) {
        return lcroots::quadratic_formula(coeffs_of(c1, c2));
      },
      "c1"_a, "c2"_a);
  m.def("match_roots", &lcroots::match_roots, "a"_a, "b"_a);

  m.def("verify_mobius_line_to_circle", &lcroots::verify_mobius_line_to_circle, "b"_a, "line"_a,
        "sample_count"_a = 100, "t_max"_a = 1e4, "tol"_a = lcroots::Tolerances{});
  m.def(
      "verify_triangle_similarity",
      [](lcroots::Complex c1, lcroots::Complex c2) {
        return lcroots::verify_triangle_similarity(coeffs_of(c1, c2));
      },
      "c1"_a, "c2"_a);
  m.def(
      "random_regular_instance",
      [](std::uint64_t seed, double scale) {
        const auto inst = lcroots::random_regular_instance(seed, scale);
        return py::make_tuple(inst.coeffs.c1, inst.coeffs.c2, inst.roots);
      },
      "seed"_a, "scale"_a = 10.0, "Returns (c1, c2, (r1, r2)).");

  m.def("parse_complex", [](const std::string& s) { return lcroots::parse_complex(s); }, "text"_a);
  m.def("format_complex", &lcroots::format_complex, "z"_a);
  m.def(
      "solve_report_json",
      [](lcroots::Complex c1, lcroots::Complex c2, bool polish) {
        lcroots::SolveOptions opts;
        opts.polish = polish;
        return lcroots::to_json(lcroots::make_solve_report(coeffs_of(c1, c2), opts)).dump();
      },
      "c1"_a, "c2"_a, "polish"_a = true, "SolveReport serialized as a JSON string.");
  m.def(
      "render_figure_svg",
      [](lcroots::Complex c1, lcroots::Complex c2, int width) {
        return lcroots::render_figure(coeffs_of(c1, c2), width).svg;
      },
      "c1"_a, "c2"_a, "width"_a = 800);

  py::register_exception<lcroots::LiteralError>(m, "LiteralError", PyExc_ValueError);
}
