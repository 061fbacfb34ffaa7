#pragma once

#include <string>

#include "lcroots/oracle.hpp"
#include "lcroots/quadratic.hpp"

namespace lcroots {

/// Plane-to-pixel map with equal axis scaling and the y axis pointing up.
struct PlaneViewport {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  /// pixels per plane unit, identical for both axes
  double scale = 1.0;
  double width = 0.0, height = 0.0;

  /// Pixel coordinates packed as (x, y).
  Complex to_pixel(Complex z) const {
    return {(z.real() - xmin) * scale, (ymax - z.imag()) * scale};
  }
};

struct Figure {
  std::string svg;
  PlaneViewport viewport;
  RootReport roots;
};

/// SVG 1.1 drawing of the constructed line and circle with markers for
/// 0, p1, c2/p1, both roots and the circle center. The viewport is the
/// bounding box of those points and the circle, padded by 10%.
/// Throws DegenerateInput for non-Regular inputs.
Figure render_figure(const QuadraticCoefficients& coeffs, int width = 800,
                     const SolveOptions& options = {});

}  // namespace lcroots
