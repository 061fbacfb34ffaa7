#include "lcroots/workflows.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "lcroots/errors.hpp"
#include "lcroots/oracle.hpp"
#include "lcroots/properties.hpp"
#include "lcroots/quadratic.hpp"

namespace lcroots {

namespace {

struct TrialMetrics {
  double mobius_radial = 0.0;
  double origin_gap = 0.0;
  double similarity_ratio = 0.0;
  double similarity_angle = 0.0;
  double theta_difference = 0.0;
  std::optional<std::string> error;
};

TrialMetrics verify_one(const Instance& inst, const VerifyOptions& opt) {
  TrialMetrics m;
  try {
    const LcConstruction lc = build_construction(inst.coeffs, opt.tol);
    const MobiusReport mob = verify_mobius_line_to_circle(inst.coeffs.c2, lc.line, opt.mobius_samples,
                                                          opt.mobius_t_max, opt.tol);
    m.mobius_radial = mob.max_radial_residual;
    m.origin_gap = mob.origin_gap;

    const SimilarityReport sim = verify_triangle_similarity(inst.coeffs, opt.tol);
    const double e = sim.expected_ratio;
    for (double r : {sim.ratio_a, sim.ratio_b, sim.ratio_c}) {
      m.similarity_ratio = std::max(m.similarity_ratio, std::abs(r - e) / e);
    }
    m.similarity_angle = std::abs(sim.angle_left - sim.angle_right);

    m.theta_difference = std::abs(
        half_turn_difference(theta_via_bisection(inst.coeffs, opt.tol), lc.theta_star));
  } catch (const LcError& e) {
    m.error = std::string(to_string(e.code())) + ": " + e.what();
  }
  return m;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& opt) {
  if (opt.trials < 1) throw LcError(ErrorCode::InvalidArgument, "trials must be at least 1");
  const auto n = static_cast<std::size_t>(opt.trials);
  std::vector<TrialMetrics> metrics(n);
  std::vector<std::uint64_t> seeds(n);
  parallel_for_index(n, opt.workers, [&](std::size_t i) {
    seeds[i] = instance_seed(opt.seed, i);
    try {
      metrics[i] = verify_one(random_regular_instance(seeds[i], opt.scale), opt);
    } catch (const std::exception& e) {
      metrics[i].error = e.what();
    }
  });

  VerifySummary sum;
  sum.trials = opt.trials;
  const VerifyBounds& b = opt.bounds;
  for (std::size_t i = 0; i < n; ++i) {
    const TrialMetrics& m = metrics[i];
    auto fail = [&](const std::string& what) { sum.failures.push_back({i, seeds[i], what}); };
    if (m.error) {
      fail(*m.error);
      continue;
    }
    sum.worst_mobius_radial = std::max(sum.worst_mobius_radial, m.mobius_radial);
    sum.worst_origin_gap = std::max(sum.worst_origin_gap, m.origin_gap);
    sum.worst_similarity_ratio = std::max(sum.worst_similarity_ratio, m.similarity_ratio);
    sum.worst_similarity_angle = std::max(sum.worst_similarity_angle, m.similarity_angle);
    sum.worst_theta_difference = std::max(sum.worst_theta_difference, m.theta_difference);
    if (!(m.mobius_radial <= b.mobius_radial)) fail("mobius radial residual " + sci(m.mobius_radial));
    if (!(m.origin_gap <= b.origin_gap)) fail("circle origin gap " + sci(m.origin_gap));
    if (!(m.similarity_ratio <= b.similarity_ratio)) {
      fail("similarity ratio deviation " + sci(m.similarity_ratio));
    }
    if (!(m.similarity_angle <= b.similarity_angle)) {
      fail("similarity angle mismatch " + sci(m.similarity_angle));
    }
    if (!(m.theta_difference <= b.theta_agreement)) {
      fail("bisection angle disagreement " + sci(m.theta_difference));
    }
  }
  return sum;
}

std::string format_verify_summary(const VerifySummary& s) {
  std::ostringstream out;
  out << "trials                       " << s.trials << "\n"
      << "worst mobius radial residual " << sci(s.worst_mobius_radial) << "\n"
      << "worst circle origin gap      " << sci(s.worst_origin_gap) << "\n"
      << "worst similarity ratio dev.  " << sci(s.worst_similarity_ratio) << "\n"
      << "worst similarity angle diff. " << sci(s.worst_similarity_angle) << "\n"
      << "worst theta disagreement     " << sci(s.worst_theta_difference) << "\n";
  if (s.ok()) {
    out << "result                       all bounds hold\n";
  } else {
    out << "result                       " << s.failures.size() << " failure(s)\n";
    for (const VerifyFailure& f : s.failures) {
      out << "  trial " << f.index << " seed " << f.seed << ": " << f.what << "\n";
    }
  }
  return out.str();
}

std::vector<BatchRecord> run_batch_records(const BatchOptions& opt) {
  if (opt.trials < 1) throw LcError(ErrorCode::InvalidArgument, "trials must be at least 1");
  const auto n = static_cast<std::size_t>(opt.trials);
  std::vector<BatchRecord> records(n);
  parallel_for_index(n, opt.workers, [&](std::size_t i) {
    BatchRecord& rec = records[i];
    rec.seed = instance_seed(opt.seed, i);
    try {
      const Instance inst = opt.near_degenerate
                                ? near_degenerate_instance(rec.seed, opt.scale, opt.near_margin)
                                : random_regular_instance(rec.seed, opt.scale);
      const Degeneracy cls = classify(inst.coeffs, opt.solve.tol);
      rec.degeneracy = static_cast<int>(cls);
      if (cls != Degeneracy::Regular) {
        rec.outcome = BatchOutcome::Degenerate;
        return;
      }
      const RootReport rep = solve(inst.coeffs, opt.solve);
      if (rep.fallback_used) {
        rec.outcome = BatchOutcome::Fallback;
        return;
      }
      rec.max_rel_error = match_roots(rep.roots(), quadratic_formula(inst.coeffs)).max_rel_error;
      rec.outcome = BatchOutcome::Solved;
    } catch (const std::exception&) {
      rec.outcome = BatchOutcome::Failed;
    }
  });
  return records;
}

BatchStats summarize_batch(const std::vector<BatchRecord>& records, double max_rel_bound) {
  BatchStats st;
  st.trials = static_cast<int>(records.size());
  std::vector<double> errors;
  errors.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const BatchRecord& r = records[i];
    switch (r.outcome) {
      case BatchOutcome::Degenerate:
        switch (static_cast<Degeneracy>(r.degeneracy)) {
          case Degeneracy::DoubleRoot: ++st.double_root; break;
          case Degeneracy::ZeroRoot: ++st.zero_root; break;
          case Degeneracy::LineThroughOrigin: ++st.line_through_origin; break;
          case Degeneracy::Regular: break;
        }
        continue;
      case BatchOutcome::Fallback:
        ++st.regular_count;
        ++st.fallback_count;
        continue;
      case BatchOutcome::Failed:
        ++st.regular_count;
        ++st.failed_count;
        continue;
      case BatchOutcome::Solved:
        ++st.regular_count;
        break;
    }
    errors.push_back(r.max_rel_error);
    if (errors.size() == 1 || r.max_rel_error > st.max_rel_error) {
      st.max_rel_error = r.max_rel_error;
      st.worst_index = i;
      st.worst_seed = r.seed;
    }
  }
  if (!errors.empty()) {
    std::sort(errors.begin(), errors.end());
    const std::size_t m = errors.size();
    st.median_rel_error = m % 2 ? errors[m / 2] : 0.5 * (errors[m / 2 - 1] + errors[m / 2]);
    // nearest-rank percentile
    const auto rank = static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(m)));
    st.p99_rel_error = errors[std::max<std::size_t>(rank, 1) - 1];
  }
  st.pass = st.max_rel_error <= max_rel_bound && st.failed_count == 0;
  return st;
}

BatchStats run_batch(const BatchOptions& opt) {
  return summarize_batch(run_batch_records(opt), opt.max_rel_bound);
}

nlohmann::json to_json(const BatchStats& st, const BatchOptions& opt) {
  return {
      {"seed", opt.seed},
      {"trials", st.trials},
      {"scale", opt.scale},
      {"near_degenerate", opt.near_degenerate},
      {"polish", opt.solve.polish},
      {"regular_count", st.regular_count},
      {"degenerate_count",
       {{"DoubleRoot", st.double_root},
        {"ZeroRoot", st.zero_root},
        {"LineThroughOrigin", st.line_through_origin}}},
      {"fallback_count", st.fallback_count},
      {"failed_count", st.failed_count},
      {"max_rel_error",
       {{"max", st.max_rel_error}, {"median", st.median_rel_error}, {"p99", st.p99_rel_error}}},
      {"worst_index", st.worst_index},
      {"worst_seed", st.worst_seed},
      {"bound", opt.max_rel_bound},
      {"pass", st.pass},
  };
}

}  // namespace lcroots
