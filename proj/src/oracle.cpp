#include "lcroots/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace lcroots {

double polynomial_residual(const QuadraticCoefficients& coeffs, Complex r) {
  return std::abs((r + coeffs.c1) * r + coeffs.c2);
}

Complex principal_sqrt(Complex z) {
  if (z.imag() == 0.0) z = {z.real(), 0.0};  // fold -0.0 onto the upper side of the cut
  return std::sqrt(z);
}

RootPair quadratic_formula(const QuadraticCoefficients& coeffs) {
  const Complex c1 = coeffs.c1;
  const Complex c2 = coeffs.c2;
  const Complex d = principal_sqrt(c1 * c1 - 4.0 * c2);
  const Complex plus = c1 + d;
  const Complex minus = c1 - d;
  const Complex q = -0.5 * (std::abs(plus) >= std::abs(minus) ? plus : minus);
  if (q == Complex{0.0, 0.0}) return {Complex{}, Complex{}};
  return {q, c2 / q};
}

MatchResult match_roots(const RootPair& a, const RootPair& b) {
  const double direct = std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
  const double crossed = std::max(std::abs(a.first - b.second), std::abs(a.second - b.first));
  MatchResult m;
  m.crossed = crossed < direct;
  m.max_abs_error = m.crossed ? crossed : direct;
  m.max_rel_error = m.max_abs_error / std::max({std::abs(b.first), std::abs(b.second), 1.0});
  return m;
}

}  // namespace lcroots
