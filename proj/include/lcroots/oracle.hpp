#pragma once

#include <utility>

#include "lcroots/geometry.hpp"

namespace lcroots {

struct QuadraticCoefficients {
  Complex c1;
  Complex c2;
};

using RootPair = std::pair<Complex, Complex>;

/// |r^2 + c1 r + c2|
double polynomial_residual(const QuadraticCoefficients& coeffs, Complex r);

/// Principal square root with the cut's preimage mapped to Im >= 0.
Complex principal_sqrt(Complex z);

/// Direct cancellation-avoiding quadratic formula. Returns (q, c2/q) where q
/// is the root of larger magnitude; (0, 0) when both roots vanish.
RootPair quadratic_formula(const QuadraticCoefficients& coeffs);

struct MatchResult {
  /// false: a.first<->b.first, a.second<->b.second; true: crossed.
  bool crossed = false;
  double max_abs_error = 0.0;
  /// max_abs_error / max(|b.first|, |b.second|, 1)
  double max_rel_error = 0.0;
};

/// Best pairing of `a` onto reference roots `b` (minimal max deviation).
MatchResult match_roots(const RootPair& a, const RootPair& b);

}  // namespace lcroots
