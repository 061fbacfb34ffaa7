#include "lcroots/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcroots/errors.hpp"

namespace lcroots {

double ParametricLine::parameter_of(Complex z) const {
  return (std::conj(direction) * (z - fixed_point)).real();
}

double ParametricLine::distance_to(Complex z) const {
  return std::abs((std::conj(direction) * (z - fixed_point)).imag());
}

double Circle::radial_residual(Complex z) const {
  return std::abs(std::abs(z - center) - radius);
}

double argument(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw LcError(ErrorCode::ZeroArgument, "argument of zero is undefined");
  }
  const double a = std::arg(z);
  // atan2 returns -pi for a negative real with a -0.0 imaginary part.
  return a == -std::numbers::pi ? std::numbers::pi : a;
}

Complex unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

double reduce_half_turn(double angle) {
  double r = std::remainder(angle, std::numbers::pi);
  if (r <= -std::numbers::pi / 2) r += std::numbers::pi;
  return r;
}

double half_turn_difference(double a, double b) {
  return std::remainder(a - b, std::numbers::pi);
}

Circle circle_through_origin(Complex w1, Complex w2, const Tolerances& tol) {
  const double x1 = w1.real(), y1 = w1.imag();
  const double x2 = w2.real(), y2 = w2.imag();
  const double det = x1 * y2 - x2 * y1;
  if (!(std::abs(det) > tol.collinear * std::abs(w1) * std::abs(w2))) {
    throw LcError(ErrorCode::CollinearPoints,
                  "points 0, w1, w2 are collinear; no circle passes through them");
  }
  const double n1 = x1 * x1 + y1 * y1;
  const double n2 = x2 * x2 + y2 * y2;
  const Complex center{(-y1 * n2 + y2 * n1) / (2.0 * det), (x1 * n2 - x2 * n1) / (2.0 * det)};
  return {center, std::abs(center)};
}

std::vector<LinePoint> intersect_line_circle(const ParametricLine& line, const Circle& circle,
                                             const Tolerances& tol) {
  const double t0 = line.parameter_of(circle.center);
  const Complex foot = line.at(t0);
  const double d = line.distance_to(circle.center);
  const double r = circle.radius;
  if (d > r * (1.0 + tol.tangent)) return {};
  const double h = std::sqrt(std::max((r - d) * (r + d), 0.0));
  if (h <= tol.tangent * r) return {{t0, foot}};
  return {{t0 - h, line.at(t0 - h)}, {t0 + h, line.at(t0 + h)}};
}

double angle_between(Complex a, Complex b) {
  const Complex q = std::conj(a) * b;
  return std::abs(std::atan2(q.imag(), q.real()));
}

}  // namespace lcroots
