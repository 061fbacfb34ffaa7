#include "lcroots/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace lcroots {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

Degeneracy degeneracy_from(const std::string& s) {
  for (Degeneracy d : {Degeneracy::Regular, Degeneracy::DoubleRoot, Degeneracy::ZeroRoot,
                       Degeneracy::LineThroughOrigin}) {
    if (to_string(d) == s) return d;
  }
  throw std::invalid_argument("unknown degeneracy class '" + s + "'");
}

json construction_json(const LcConstruction& lc) {
  return {
      {"p1", complex_json(lc.p1)},
      {"v_d", complex_json(lc.v_d)},
      {"theta_star", lc.theta_star},
      {"line", {{"fixed_point", complex_json(lc.line.fixed_point)},
                {"direction", complex_json(lc.line.direction)}}},
      {"w1", complex_json(lc.w1)},
      {"w2", complex_json(lc.w2)},
      {"circle", {{"center", complex_json(lc.circle.center)}, {"radius", lc.circle.radius}}},
  };
}

LcConstruction construction_from(const json& j) {
  LcConstruction lc;
  lc.p1 = complex_from(j.at("p1"));
  lc.v_d = complex_from(j.at("v_d"));
  lc.theta_star = j.at("theta_star").get<double>();
  lc.line = {complex_from(j.at("line").at("fixed_point")),
             complex_from(j.at("line").at("direction"))};
  lc.w1 = complex_from(j.at("w1"));
  lc.w2 = complex_from(j.at("w2"));
  lc.circle = {complex_from(j.at("circle").at("center")),
               j.at("circle").at("radius").get<double>()};
  return lc;
}

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

std::string fmt_complex(Complex z) {
  return fmt("%.10g", z.real()) + (z.imag() < 0 ? " - " : " + ") +
         fmt("%.10g", std::abs(z.imag())) + "i";
}

}  // namespace

SolveReport make_solve_report(const QuadraticCoefficients& coeffs, const SolveOptions& options) {
  SolveReport rep;
  rep.input = coeffs;
  rep.degeneracy = classify(coeffs, options.tol);
  rep.oracle_roots = quadratic_formula(coeffs);
  try {
    rep.lc = solve(coeffs, options);
    rep.match = match_roots(rep.lc->roots(), rep.oracle_roots);
  } catch (const LcError& e) {
    rep.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return rep;
}

json to_json(const SolveReport& rep) {
  json j;
  j["input"] = {{"c1", complex_json(rep.input.c1)}, {"c2", complex_json(rep.input.c2)}};
  j["class"] = std::string(to_string(rep.degeneracy));
  const auto& lc = rep.lc;
  j["construction"] = lc && lc->construction ? construction_json(*lc->construction) : json(nullptr);
  if (lc) {
    j["roots"] = json::array({
        {{"value", complex_json(lc->r1)}, {"residual", lc->residual1}, {"t", lc->line_parameters[0]}},
        {{"value", complex_json(lc->r2)}, {"residual", lc->residual2}, {"t", lc->line_parameters[1]}},
    });
  } else {
    j["roots"] = nullptr;
  }
  j["oracle_roots"] = json::array({complex_json(rep.oracle_roots.first),
                                   complex_json(rep.oracle_roots.second)});
  j["match"] = rep.match ? json{{"crossed", rep.match->crossed},
                                {"max_abs_error", rep.match->max_abs_error},
                                {"max_rel_error", rep.match->max_rel_error}}
                         : json(nullptr);
  j["flags"] = {{"polish_applied", lc && lc->polish_applied},
                {"fallback_used", lc && lc->fallback_used}};
  j["error"] = rep.error ? json(*rep.error) : json(nullptr);
  return j;
}

SolveReport solve_report_from_json(const json& j) {
  SolveReport rep;
  rep.input = {complex_from(j.at("input").at("c1")), complex_from(j.at("input").at("c2"))};
  rep.degeneracy = degeneracy_from(j.at("class").get<std::string>());
  if (!j.at("roots").is_null()) {
    RootReport lc;
    const json& roots = j.at("roots");
    lc.r1 = complex_from(roots.at(0).at("value"));
    lc.r2 = complex_from(roots.at(1).at("value"));
    lc.residual1 = roots.at(0).at("residual").get<double>();
    lc.residual2 = roots.at(1).at("residual").get<double>();
    lc.line_parameters = {roots.at(0).at("t").get<double>(), roots.at(1).at("t").get<double>()};
    if (!j.at("construction").is_null()) lc.construction = construction_from(j.at("construction"));
    lc.polish_applied = j.at("flags").at("polish_applied").get<bool>();
    lc.fallback_used = j.at("flags").at("fallback_used").get<bool>();
    rep.lc = lc;
  }
  rep.oracle_roots = {complex_from(j.at("oracle_roots").at(0)),
                      complex_from(j.at("oracle_roots").at(1))};
  if (!j.at("match").is_null()) {
    const json& m = j.at("match");
    rep.match = MatchResult{m.at("crossed").get<bool>(), m.at("max_abs_error").get<double>(),
                            m.at("max_rel_error").get<double>()};
  }
  if (!j.at("error").is_null()) rep.error = j.at("error").get<std::string>();
  return rep;
}

std::string format_dms(double radians) {
  const double degrees = std::abs(radians) * 180.0 / std::numbers::pi;
  // Round at the millisecond of arc first so 59.9995" carries into the minutes.
  const long long total_ms = std::llround(degrees * 3600.0 * 1000.0);
  const long long d = total_ms / 3600000;
  const long long m = (total_ms / 60000) % 60;
  const double s = static_cast<double>(total_ms % 60000) / 1000.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld°%02lld′%06.3f″", radians < 0 ? "-" : "", d, m, s);
  return buf;
}

std::string format_solve_table(const SolveReport& rep) {
  std::ostringstream out;
  out << "equation      x^2 + (" << fmt_complex(rep.input.c1) << ")x + ("
      << fmt_complex(rep.input.c2) << ") = 0\n";
  out << "class         " << to_string(rep.degeneracy) << "\n";
  if (rep.lc && rep.lc->construction) {
    const LcConstruction& c = *rep.lc->construction;
    out << "theta*        " << fmt("%.7f", c.theta_star) << " rad = " << format_dms(c.theta_star)
        << "\n";
    out << "p1            " << fmt_complex(c.p1) << "\n";
    out << "direction     " << fmt_complex(c.line.direction) << "\n";
    out << "v_d           " << fmt_complex(c.v_d) << "\n";
    out << "w1 = c2/p1    " << fmt_complex(c.w1) << "\n";
    out << "w2            " << fmt_complex(c.w2) << "\n";
    out << "circle center " << fmt_complex(c.circle.center) << "\n";
    out << "circle radius " << fmt("%.10g", c.circle.radius) << "\n";
  }
  if (rep.lc) {
    out << "r1            " << fmt_complex(rep.lc->r1) << "   |p(r1)| = "
        << fmt("%.3e", rep.lc->residual1) << "\n";
    out << "r2            " << fmt_complex(rep.lc->r2) << "   |p(r2)| = "
        << fmt("%.3e", rep.lc->residual2) << "\n";
  }
  out << "oracle roots  " << fmt_complex(rep.oracle_roots.first) << ", "
      << fmt_complex(rep.oracle_roots.second) << "\n";
  if (rep.match) {
    out << "max rel error " << fmt("%.3e", rep.match->max_rel_error) << "\n";
  }
  if (rep.lc) {
    out << "polish        " << (rep.lc->polish_applied ? "on" : "off") << "\n";
    if (rep.lc->fallback_used) out << "fallback      oracle roots returned\n";
  }
  if (rep.error) out << "error         " << *rep.error << "\n";
  return out.str();
}

}  // namespace lcroots
