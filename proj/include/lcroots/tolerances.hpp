#pragma once

namespace lcroots {

/// Every threshold used by the geometric code lives here. Passed by value;
/// there is no global configuration.
struct Tolerances {
  /// |x1*y2 - x2*y1| must exceed this times |w1|*|w2| for a circle fit.
  double collinear = 1e-12;
  /// Relative threshold (scale max(|c1|^2, |c2|, 1)) for the degeneracy classes.
  double degenerate = 1e-12;
  /// Relative slack for line/circle misses and tangency collapse.
  double tangent = 1e-12;
  /// Bound on |p(r)| / max(|c2|, 1) an LC root must meet before it is returned,
  /// and on the Newton step estimate |p(r) / p'(r)| / max(|r|, 1).
  double root = 1e-9;
  /// |u1 + u2| below this means the bisected angle is a straight angle.
  double bisector = 1e-9;
};

struct SolveOptions {
  Tolerances tol{};
  bool polish = true;
  int newton_steps = 2;
  /// Return flagged oracle roots instead of throwing NoIntersection, and
  /// instead of roots that miss the residual bound.
  bool fallback = true;
};

}  // namespace lcroots
