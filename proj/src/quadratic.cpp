#include "lcroots/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lcroots {

namespace {

void require_regular(const QuadraticCoefficients& coeffs, const Tolerances& tol) {
  const Degeneracy cls = classify(coeffs, tol);
  if (cls != Degeneracy::Regular) {
    throw LcError(cls, "quadratic is degenerate for the line/circle method: " +
                           std::string(to_string(cls)));
  }
}

// Up to `steps` Newton iterations, each kept only if it lowers |p(r)|.
Complex newton_polish(const QuadraticCoefficients& coeffs, Complex r, int steps) {
  double residual = polynomial_residual(coeffs, r);
  for (int i = 0; i < steps && residual > 0.0; ++i) {
    const Complex slope = 2.0 * r + coeffs.c1;
    if (slope == Complex{0.0, 0.0}) break;
    const Complex next = r - ((r + coeffs.c1) * r + coeffs.c2) / slope;
    const double next_residual = polynomial_residual(coeffs, next);
    if (!(next_residual < residual)) break;
    r = next;
    residual = next_residual;
  }
  return r;
}

RootReport oracle_fallback(const QuadraticCoefficients& coeffs,
                           std::optional<LcConstruction> construction) {
  RootReport report;
  auto [a, b] = quadratic_formula(coeffs);
  if (construction) {
    double ta = construction->line.parameter_of(a);
    double tb = construction->line.parameter_of(b);
    if (tb < ta) {
      std::swap(a, b);
      std::swap(ta, tb);
    }
    report.line_parameters = {ta, tb};
  }
  report.r1 = a;
  report.r2 = b;
  report.residual1 = polynomial_residual(coeffs, a);
  report.residual2 = polynomial_residual(coeffs, b);
  report.construction = std::move(construction);
  report.fallback_used = true;
  return report;
}

}  // namespace

double coefficient_scale(const QuadraticCoefficients& coeffs) {
  return std::max({std::norm(coeffs.c1), std::abs(coeffs.c2), 1.0});
}

Degeneracy classify(const QuadraticCoefficients& coeffs, const Tolerances& tol) {
  const double s = coefficient_scale(coeffs);
  const double eps = tol.degenerate;
  if (std::abs(coeffs.c1 * coeffs.c1 / 4.0 - coeffs.c2) <= eps * s) return Degeneracy::DoubleRoot;
  if (std::abs(coeffs.c2) <= eps * s) return Degeneracy::ZeroRoot;
  const auto [r1, r2] = quadratic_formula(coeffs);
  const Complex ratio = r2 / r1;
  const Complex p1 = -coeffs.c1 / 2.0;
  if (std::abs(ratio.imag()) <= eps * std::abs(ratio) || std::abs(p1) <= eps * std::sqrt(s)) {
    return Degeneracy::LineThroughOrigin;
  }
  return Degeneracy::Regular;
}

double compute_theta(const QuadraticCoefficients& coeffs, const Tolerances& tol) {
  const Complex disc = coeffs.c1 * coeffs.c1 / 4.0 - coeffs.c2;
  if (std::abs(disc) <= tol.degenerate * coefficient_scale(coeffs)) {
    throw LcError(ErrorCode::DoubleRootDegenerate,
                  "c1^2/4 - c2 vanishes; the inclination angle is undefined");
  }
  return argument(disc) / 2.0;
}

LcConstruction build_construction(const QuadraticCoefficients& coeffs, const Tolerances& tol) {
  require_regular(coeffs, tol);
  LcConstruction lc;
  lc.p1 = -coeffs.c1 / 2.0;
  lc.v_d = coeffs.c2 - lc.p1 * lc.p1;
  lc.theta_star = compute_theta(coeffs, tol);
  lc.line = {lc.p1, unit_direction(lc.theta_star)};
  lc.w1 = coeffs.c2 / lc.p1;
  lc.w2 = coeffs.c2 / (lc.p1 + lc.line.direction);
  lc.circle = circle_through_origin(lc.w1, lc.w2, tol);
  return lc;
}

RootReport solve(const QuadraticCoefficients& coeffs, const SolveOptions& options) {
  const Tolerances& tol = options.tol;
  require_regular(coeffs, tol);

  LcConstruction lc;
  try {
    lc = build_construction(coeffs, tol);
  } catch (const LcError& e) {
    if (e.code() != ErrorCode::CollinearPoints) throw;
    return oracle_fallback(coeffs, std::nullopt);
  }

  const auto hits = intersect_line_circle(lc.line, lc.circle, tol);
  // Near the line-through-origin boundary the circle is huge and the chord
  // can round away entirely.
  if (hits.size() < 2 && options.fallback) return oracle_fallback(coeffs, std::move(lc));
  if (hits.size() < 2) {
    throw LcError(ErrorCode::NoIntersection,
                  "line and circle produced " + std::to_string(hits.size()) +
                      " intersection(s) for a regular quadratic");
  }

  RootReport report;
  report.r1 = hits[0].point;
  report.r2 = hits[1].point;
  report.line_parameters = {hits[0].t, hits[1].t};
  if (options.polish) {
    report.r1 = newton_polish(coeffs, report.r1, options.newton_steps);
    report.r2 = newton_polish(coeffs, report.r2, options.newton_steps);
    report.polish_applied = true;
  }
  report.residual1 = polynomial_residual(coeffs, report.r1);
  report.residual2 = polynomial_residual(coeffs, report.r2);

  // A small residual is not enough for close roots: the size of the next
  // Newton step, |p(r) / p'(r)|, estimates the remaining error.
  const double bound = tol.root * std::max(std::abs(coeffs.c2), 1.0);
  auto settled = [&](Complex r, double residual) {
    const double slope = std::abs(2.0 * r + coeffs.c1);
    return residual <= bound && residual <= tol.root * std::max(std::abs(r), 1.0) * slope;
  };
  if (options.fallback && !(settled(report.r1, report.residual1) && settled(report.r2, report.residual2))) {
    RootReport fallback = oracle_fallback(coeffs, lc);
    fallback.polish_applied = report.polish_applied;
    return fallback;
  }
  report.construction = std::move(lc);
  return report;
}

double theta_via_bisection(const QuadraticCoefficients& coeffs, const Tolerances& tol) {
  require_regular(coeffs, tol);
  const Complex p1 = -coeffs.c1 / 2.0;
  const Complex to_w1 = coeffs.c2 / p1 - p1;
  if (to_w1 == Complex{0.0, 0.0}) {
    throw LcError(ErrorCode::BisectorUndefined, "c2/p1 coincides with p1");
  }
  const Complex u1 = -p1 / std::abs(p1);
  const Complex u2 = to_w1 / std::abs(to_w1);
  const Complex sum = u1 + u2;
  const Complex bisector = std::abs(sum) > tol.bisector ? sum / std::abs(sum) : Complex{0.0, 1.0} * u1;
  return reduce_half_turn(argument(bisector));
}

}  // namespace lcroots
