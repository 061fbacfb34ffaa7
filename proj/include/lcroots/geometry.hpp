#pragma once

#include <complex>
#include <vector>

#include "lcroots/tolerances.hpp"

namespace lcroots {

using Complex = std::complex<double>;

/// Trajectory {fixed_point + t * direction : t real}, |direction| = 1.
struct ParametricLine {
  Complex fixed_point;
  Complex direction;

  Complex at(double t) const { return fixed_point + t * direction; }
  /// Parameter of the orthogonal projection of `z` onto the line.
  double parameter_of(Complex z) const;
  /// Euclidean distance from `z` to the trajectory.
  double distance_to(Complex z) const;
};

struct Circle {
  Complex center;
  double radius = 0.0;

  /// | |z - center| - radius |
  double radial_residual(Complex z) const;
};

/// A point on a line together with its parameter t.
struct LinePoint {
  double t = 0.0;
  Complex point;
};

/// Principal argument in (-pi, pi]. Throws ZeroArgument for z == 0.
double argument(Complex z);

/// cos(theta) + i sin(theta)
Complex unit_direction(double theta);

/// Reduces an angle modulo pi into (-pi/2, pi/2].
double reduce_half_turn(double angle);

/// Signed difference of two line inclinations modulo pi, in [-pi/2, pi/2].
double half_turn_difference(double a, double b);

/// Circle through 0, w1 and w2 using the closed-form center of the reduced
/// 2x2 system; radius is |center|. Throws CollinearPoints when the three
/// points are (numerically) collinear, which includes w1 == 0, w2 == 0 and
/// w1 == w2.
Circle circle_through_origin(Complex w1, Complex w2, const Tolerances& tol = {});

/// Intersections of a line with a circle, ordered by ascending t. Empty when
/// the line misses; one point at tangency.
std::vector<LinePoint> intersect_line_circle(const ParametricLine& line, const Circle& circle,
                                             const Tolerances& tol = {});

/// Unsigned angle in [0, pi] between two nonzero vectors.
double angle_between(Complex a, Complex b);

}  // namespace lcroots
