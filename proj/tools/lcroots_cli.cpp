#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcroots/errors.hpp"
#include "lcroots/figure.hpp"
#include "lcroots/literal.hpp"
#include "lcroots/report.hpp"
#include "lcroots/workflows.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitVerifyFailed = 3;

void add_tolerance_flags(CLI::App* cmd, lcroots::Tolerances& tol) {
  cmd->add_option("--tol-root", tol.root, "residual bound for returned roots, relative to max(|c2|,1)")
      ->capture_default_str();
  cmd->add_option("--tol-degenerate", tol.degenerate, "degeneracy classification threshold")
      ->capture_default_str();
  cmd->add_option("--tol-collinear", tol.collinear, "collinearity threshold for the circle fit")
      ->capture_default_str();
}

lcroots::Complex parse_arg(const std::string& name, const std::string& text) {
  try {
    return lcroots::parse_complex(text);
  } catch (const lcroots::LiteralError& e) {
    throw CLI::ValidationError(name, "cannot parse '" + text + "': " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic roots as line/circle intersections in the complex plane"};
  app.require_subcommand(1);

  lcroots::SolveOptions solve_opts;
  std::string c1_text, c2_text;
  bool as_json = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve x^2 + c1 x + c2 = 0 and print the report");
  solve_cmd->add_option("--c1", c1_text, "linear coefficient, e.g. -1-7i")->required();
  solve_cmd->add_option("--c2", c2_text, "constant coefficient, e.g. -18+1i")->required();
  solve_cmd->add_flag("--json", as_json, "print the report as JSON");
  solve_cmd->add_flag("--polish,!--no-polish", solve_opts.polish,
                      "Newton-polish the intersections (default on)");
  add_tolerance_flags(solve_cmd, solve_opts.tol);

  std::string figure_out;
  int figure_width = 800;
  auto* figure_cmd = app.add_subcommand("figure", "write an SVG of the line and circle");
  figure_cmd->add_option("--c1", c1_text, "linear coefficient")->required();
  figure_cmd->add_option("--c2", c2_text, "constant coefficient")->required();
  figure_cmd->add_option("--out", figure_out, "output SVG path")->required();
  figure_cmd->add_option("--width", figure_width, "width in pixels")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_tolerance_flags(figure_cmd, solve_opts.tol);

  lcroots::VerifyOptions verify_opts;
  verify_opts.workers = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "check the geometric propositions on random instances");
  verify_cmd->add_option("--seed", verify_opts.seed, "stream seed")->capture_default_str();
  verify_cmd->add_option("--trials", verify_opts.trials, "number of instances")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--scale", verify_opts.scale, "roots drawn from [-scale, scale]^2")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--workers", verify_opts.workers, "threads")->check(CLI::PositiveNumber);
  add_tolerance_flags(verify_cmd, verify_opts.tol);

  lcroots::BatchOptions batch_opts;
  batch_opts.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string batch_out;
  auto* batch_cmd = app.add_subcommand("batch", "compare solve against the direct formula");
  batch_cmd->add_option("--seed", batch_opts.seed, "stream seed")->capture_default_str();
  batch_cmd->add_option("--trials", batch_opts.trials, "number of instances")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch_cmd->add_option("--scale", batch_opts.scale, "roots drawn from [-scale, scale]^2")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--near-degenerate", batch_opts.near_degenerate,
                      "draw instances near the degeneracy boundaries");
  batch_cmd->add_option("--out", batch_out, "also write the statistics JSON here");
  batch_cmd->add_option("--workers", batch_opts.workers, "threads")->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--polish,!--no-polish", batch_opts.solve.polish,
                      "Newton-polish the intersections (default on)");
  add_tolerance_flags(batch_cmd, batch_opts.solve.tol);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      const lcroots::QuadraticCoefficients coeffs{parse_arg("--c1", c1_text),
                                                  parse_arg("--c2", c2_text)};
      const lcroots::SolveReport rep = lcroots::make_solve_report(coeffs, solve_opts);
      if (as_json) {
        std::cout << lcroots::to_json(rep).dump(2) << "\n";
      } else {
        std::cout << lcroots::format_solve_table(rep);
      }
      if (rep.degeneracy != lcroots::Degeneracy::Regular) return kExitDegenerate;
      return rep.lc ? kExitOk : kExitUsage;
    }

    if (*figure_cmd) {
      const lcroots::QuadraticCoefficients coeffs{parse_arg("--c1", c1_text),
                                                  parse_arg("--c2", c2_text)};
      const lcroots::Figure fig = lcroots::render_figure(coeffs, figure_width, solve_opts);
      std::ofstream out(figure_out, std::ios::binary);
      out << fig.svg;
      if (!out) {
        std::cerr << "error: cannot write " << figure_out << "\n";
        return kExitUsage;
      }
      std::cout << "wrote " << figure_out << "\n";
      return kExitOk;
    }

    if (*verify_cmd) {
      const lcroots::VerifySummary sum = lcroots::run_verify(verify_opts);
      std::cout << lcroots::format_verify_summary(sum);
      return sum.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (*batch_cmd) {
      const lcroots::BatchStats stats = lcroots::run_batch(batch_opts);
      const std::string text = lcroots::to_json(stats, batch_opts).dump(2) + "\n";
      std::cout << text;
      if (!batch_out.empty()) {
        std::ofstream out(batch_out, std::ios::binary);
        out << text;
        if (!out) {
          std::cerr << "error: cannot write " << batch_out << "\n";
          return kExitUsage;
        }
      }
      return stats.pass ? kExitOk : kExitVerifyFailed;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lcroots::LcError& e) {
    std::cerr << "error: " << lcroots::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == lcroots::ErrorCode::DegenerateInput ? kExitDegenerate : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
