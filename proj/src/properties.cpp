#include "lcroots/properties.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lcroots/errors.hpp"
#include "lcroots/quadratic.hpp"

namespace lcroots {

namespace {

constexpr int kMaxDraws = 1000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::mt19937_64's output sequence is fixed by the standard; the standard
// distributions are not, so doubles are built from raw 64-bit draws.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  /// [0, 1)
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double symmetric(double scale) { return scale * (2.0 * unit() - 1.0); }
  Complex in_square(double scale) { return {symmetric(scale), symmetric(scale)}; }

 private:
  std::mt19937_64 engine_;
};

Instance make_instance(Complex r1, Complex r2) {
  return {{-(r1 + r2), r1 * r2}, {r1, r2}};
}

bool similar_at(const SimilarityReport& rep, double tol) {
  const double e = rep.expected_ratio;
  return std::abs(rep.ratio_a - e) <= tol * e && std::abs(rep.ratio_b - e) <= tol * e &&
         std::abs(rep.ratio_c - e) <= tol * e &&
         std::abs(rep.angle_left - rep.angle_right) <= tol;
}

SimilarityReport similarity_for(Complex p1, Complex w1, Complex r, Complex other) {
  SimilarityReport rep;
  rep.ratio_a = std::abs(p1) / std::abs(r - p1);
  rep.ratio_b = std::abs(r - p1) / std::abs(w1 - p1);
  rep.ratio_c = std::abs(r) / std::abs(w1 - r);
  rep.expected_ratio = std::abs(r + other) / std::abs(r - other);
  rep.angle_left = angle_between(-p1, r - p1);
  rep.angle_right = angle_between(r - p1, w1 - p1);
  return rep;
}

}  // namespace

MobiusReport verify_mobius_line_to_circle(Complex b, const ParametricLine& line, int sample_count,
                                          double t_max, const Tolerances& tol) {
  if (b == Complex{0.0, 0.0}) {
    throw LcError(ErrorCode::ZeroMultiplier, "Mobius multiplier b must be nonzero");
  }
  if (sample_count < 3 || !(t_max > 0.0)) {
    throw LcError(ErrorCode::InvalidArgument, "need at least 3 samples and t_max > 0");
  }
  if (!(line.distance_to(Complex{}) > 1e-9 * std::abs(line.fixed_point))) {
    throw LcError(ErrorCode::CollinearPoints,
                  "line passes through the origin; its image is a line, not a circle");
  }

  MobiusReport rep;
  rep.sample_count = sample_count;
  rep.fitted_circle = circle_through_origin(b / line.at(0.0), b / line.at(1.0), tol);
  const Circle& c = rep.fitted_circle;

  // t = s * tan(phi), phi evenly spaced, so both the far tail and the
  // stretch near the fixed point are covered.
  const double s = std::max(std::abs(line.fixed_point), 1.0);
  const double phi_max = std::atan(t_max / s);
  for (int k = 0; k < sample_count; ++k) {
    double t;
    if (k == 0) {
      t = -t_max;
    } else if (k == sample_count - 1) {
      t = t_max;
    } else {
      const double phi = -phi_max + 2.0 * phi_max * k / (sample_count - 1);
      t = s * std::tan(phi);
    }
    const Complex image = b / line.at(t);
    rep.max_radial_residual = std::max(rep.max_radial_residual, c.radial_residual(image) / c.radius);
  }
  rep.origin_gap = std::abs(std::abs(c.center) - c.radius) / c.radius;
  rep.tail_magnitude =
      std::max(std::abs(b / line.at(t_max)), std::abs(b / line.at(-t_max)));
  return rep;
}

SimilarityReport verify_triangle_similarity(const QuadraticCoefficients& coeffs,
                                            const Tolerances& tol) {
  const RootReport roots = solve(coeffs, SolveOptions{tol});
  const Complex p1 = -coeffs.c1 / 2.0;
  const Complex w1 = coeffs.c2 / p1;
  const Complex bisector = -p1 / std::abs(p1) + (w1 - p1) / std::abs(w1 - p1);

  // The bisector ray from p1 points at one of the roots; prefer it.
  const bool first_on_ray =
      (std::conj(bisector) * (roots.r1 - p1)).real() >= (std::conj(bisector) * (roots.r2 - p1)).real();
  Complex r = first_on_ray ? roots.r1 : roots.r2;
  Complex other = first_on_ray ? roots.r2 : roots.r1;
  SimilarityReport rep = similarity_for(p1, w1, r, other);
  rep.root_index = first_on_ray ? 1 : 2;
  if (!similar_at(rep, 1e-10)) {
    SimilarityReport alt = similarity_for(p1, w1, other, r);
    alt.root_index = first_on_ray ? 2 : 1;
    if (similar_at(alt, 1e-10)) return alt;
  }
  return rep;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

Instance random_regular_instance(std::uint64_t seed, double scale, const GeneratorMargins& margins) {
  if (!(scale > 0.0)) throw LcError(ErrorCode::InvalidArgument, "scale must be positive");
  Uniform rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Complex r1 = rng.in_square(scale);
    const Complex r2 = rng.in_square(scale);
    if (std::abs(r1 - r2) <= margins.separation * scale) continue;
    if (std::abs(r1) <= margins.magnitude * scale || std::abs(r2) <= margins.magnitude * scale) {
      continue;
    }
    if (std::abs((r2 / r1).imag()) <= margins.collinearity) continue;
    return make_instance(r1, r2);
  }
  throw LcError(ErrorCode::GeneratorExhausted,
                "no admissible root pair after " + std::to_string(kMaxDraws) + " draws");
}

Instance near_degenerate_instance(std::uint64_t seed, double scale, double margin) {
  if (!(scale > 0.0)) throw LcError(ErrorCode::InvalidArgument, "scale must be positive");
  Uniform rng(seed);
  const std::uint64_t mode = static_cast<std::uint64_t>(rng.unit() * 4.0);
  // log-uniform offset in [margin, 1) * scale
  const double eps = scale * std::pow(margin, rng.unit());
  Complex r1 = rng.in_square(scale);
  while (std::abs(r1) <= margin * scale) r1 = rng.in_square(scale);
  const Complex jitter = unit_direction(2.0 * std::numbers::pi * rng.unit());
  switch (mode) {
    case 0:  // close pair
      return make_instance(r1, r1 + eps * jitter);
    case 1:  // one root near zero
      return make_instance(r1, eps * jitter);
    case 2: {  // 0, r1, r2 nearly collinear
      const double stretch = 2.0 * rng.unit() - 1.0;
      const double t = std::abs(stretch) < 1e-3 ? 0.5 : stretch;
      return make_instance(r1, t * r1 * unit_direction(eps / scale));
    }
    default:
      return random_regular_instance(seed, scale, {margin, margin, margin});
  }
}

}  // namespace lcroots
