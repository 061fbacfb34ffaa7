#pragma once

#include <cstdint>

#include "lcroots/geometry.hpp"
#include "lcroots/oracle.hpp"
#include "lcroots/tolerances.hpp"

namespace lcroots {

struct MobiusReport {
  Circle fitted_circle;
  /// max over samples of | |b/z - center| - radius | / radius
  double max_radial_residual = 0.0;
  /// | |center| - radius | / radius
  double origin_gap = 0.0;
  /// max |b/z| at t = +-t_max
  double tail_magnitude = 0.0;
  int sample_count = 0;
};

/// Samples the image of `line` under z -> b / z and measures how far the
/// images stray from the circle fitted through the images of t = 0 and t = 1.
/// Samples are tangent-spaced over [-t_max, t_max].
MobiusReport verify_mobius_line_to_circle(Complex b, const ParametricLine& line, int sample_count,
                                          double t_max, const Tolerances& tol = {});

struct SimilarityReport {
  double ratio_a = 0.0;  // |p1| / |r - p1|
  double ratio_b = 0.0;  // |r - p1| / |c2/p1 - p1|
  double ratio_c = 0.0;  // |r| / |c2/p1 - r|
  double expected_ratio = 0.0;  // |r1 + r2| / |r1 - r2|
  double angle_left = 0.0;   // angle 0, p1, r
  double angle_right = 0.0;  // angle r, p1, c2/p1
  /// Which root (1 or 2, in solve() order) the report was computed for.
  int root_index = 1;
};

/// Checks that triangles (0, p1, r) and (r, p1, c2/p1) are similar, with r
/// the root the bisector of angle 0, p1, c2/p1 points toward.
SimilarityReport verify_triangle_similarity(const QuadraticCoefficients& coeffs,
                                            const Tolerances& tol = {});

/// Rejection margins for the instance generator. Separation and magnitude
/// are fractions of `scale`; collinearity bounds |Im(r2/r1)|.
struct GeneratorMargins {
  double separation = 1e-3;
  double magnitude = 1e-3;
  double collinearity = 1e-3;
};

struct Instance {
  QuadraticCoefficients coeffs;
  RootPair roots;
};

/// Deterministic instance with both roots uniform in [-scale, scale]^2.
/// Throws GeneratorExhausted after 1000 rejected draws.
Instance random_regular_instance(std::uint64_t seed, double scale,
                                 const GeneratorMargins& margins = {});

/// Seed of instance `index` in a stream started from `seed`.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);

/// Stress generator: draws roots that sit close to one of the degeneracy
/// boundaries (close pair, near-zero root, near-collinear with 0) at a
/// log-uniform distance down to `margin * scale`. Output need not be Regular.
Instance near_degenerate_instance(std::uint64_t seed, double scale, double margin = 1e-9);

}  // namespace lcroots
