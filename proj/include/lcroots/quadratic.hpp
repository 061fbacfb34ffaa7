#pragma once

#include <array>
#include <optional>

#include "lcroots/errors.hpp"
#include "lcroots/geometry.hpp"
#include "lcroots/oracle.hpp"
#include "lcroots/tolerances.hpp"

namespace lcroots {

/// The line/circle pair built from (c1, c2). Both roots lie on `line` and on
/// `circle`, which is the image of `line` under z -> c2 / z.
struct LcConstruction {
  Complex p1;          // -c1 / 2, midpoint of the roots
  Complex v_d;         // c2 - p1^2, direction of the product half-line
  double theta_star = 0.0;
  ParametricLine line;
  Complex w1;          // c2 / p1
  Complex w2;          // c2 / (p1 + direction)
  Circle circle;
};

struct RootReport {
  Complex r1;
  Complex r2;
  double residual1 = 0.0;
  double residual2 = 0.0;
  /// Absent only when the oracle fallback was taken before the circle fit.
  std::optional<LcConstruction> construction;
  /// Intersection parameters along the line, t1 < t2. Zero on fallback.
  std::array<double, 2> line_parameters{};
  bool polish_applied = false;
  bool fallback_used = false;

  RootPair roots() const { return {r1, r2}; }
};

/// max(|c1|^2, |c2|, 1)
double coefficient_scale(const QuadraticCoefficients& coeffs);

Degeneracy classify(const QuadraticCoefficients& coeffs, const Tolerances& tol = {});

/// arg(c1^2/4 - c2) / 2 in (-pi/2, pi/2]. Throws DoubleRootDegenerate.
double compute_theta(const QuadraticCoefficients& coeffs, const Tolerances& tol = {});

/// Throws DegenerateInput unless classify() is Regular.
LcConstruction build_construction(const QuadraticCoefficients& coeffs, const Tolerances& tol = {});

/// Roots as the intersections of the constructed line and circle, ordered by
/// ascending line parameter. Throws DegenerateInput for non-Regular inputs.
///
/// Borderline inputs where the circle fit still reports collinear points
/// return the oracle roots with `fallback_used` set. With
/// `options.fallback` the same happens when fewer than two intersections are
/// found or a root misses the residual or step bound; without it the first case
/// throws NoIntersection and the second returns the raw roots.
RootReport solve(const QuadraticCoefficients& coeffs, const SolveOptions& options = {});

/// Inclination of the line from the bisector of the angle 0, p1, c2/p1.
double theta_via_bisection(const QuadraticCoefficients& coeffs, const Tolerances& tol = {});

}  // namespace lcroots
