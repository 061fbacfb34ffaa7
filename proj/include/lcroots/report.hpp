#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "lcroots/errors.hpp"
#include "lcroots/oracle.hpp"
#include "lcroots/quadratic.hpp"

namespace lcroots {

/// Everything `solve` prints: the LC result when the input is Regular, the
/// oracle roots always.
struct SolveReport {
  QuadraticCoefficients input;
  Degeneracy degeneracy = Degeneracy::Regular;
  std::optional<RootReport> lc;
  RootPair oracle_roots;
  std::optional<MatchResult> match;
  /// Set when the LC path threw (DegenerateInput, NoIntersection, ...).
  std::optional<std::string> error;
};

SolveReport make_solve_report(const QuadraticCoefficients& coeffs, const SolveOptions& options);

nlohmann::json to_json(const SolveReport& report);
SolveReport solve_report_from_json(const nlohmann::json& j);

/// 0.1973956 -> 11°18′35.757″
std::string format_dms(double radians);

/// Human-readable table.
std::string format_solve_table(const SolveReport& report);

}  // namespace lcroots
