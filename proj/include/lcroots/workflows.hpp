#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "lcroots/tolerances.hpp"

namespace lcroots {

/// Bounds checked by `verify`, one per proposition.
struct VerifyBounds {
  double mobius_radial = 1e-9;
  double origin_gap = 1e-12;
  double similarity_ratio = 1e-10;
  double similarity_angle = 1e-10;
  double theta_agreement = 1e-9;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  double scale = 10.0;
  int mobius_samples = 100;
  double mobius_t_max = 1e4;
  unsigned workers = 1;
  Tolerances tol{};
  VerifyBounds bounds{};
};

struct VerifyFailure {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::string what;
};

struct VerifySummary {
  int trials = 0;
  double worst_mobius_radial = 0.0;
  double worst_origin_gap = 0.0;
  double worst_similarity_ratio = 0.0;  // relative deviation from |r1+r2|/|r1-r2|
  double worst_similarity_angle = 0.0;
  double worst_theta_difference = 0.0;  // mod pi
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Runs the Mobius, similarity and bisection checks on `trials` generated
/// instances. Instance i is derived only from (seed, i), so the summary does
/// not depend on `workers`.
VerifySummary run_verify(const VerifyOptions& options);

std::string format_verify_summary(const VerifySummary& summary);

struct BatchOptions {
  std::uint64_t seed = 42;
  int trials = 10000;
  double scale = 10.0;
  bool near_degenerate = false;
  double near_margin = 1e-9;
  unsigned workers = 1;
  SolveOptions solve{};
  double max_rel_bound = 1e-8;
};

/// Per-instance outcome of solve() against the oracle.
enum class BatchOutcome { Solved, Fallback, Degenerate, Failed };

struct BatchRecord {
  std::uint64_t seed = 0;
  BatchOutcome outcome = BatchOutcome::Failed;
  int degeneracy = 0;  // Degeneracy as int
  double max_rel_error = 0.0;
};

struct BatchStats {
  int trials = 0;
  int regular_count = 0;
  int double_root = 0;
  int zero_root = 0;
  int line_through_origin = 0;
  int fallback_count = 0;
  int failed_count = 0;
  /// Over instances solved without fallback.
  double max_rel_error = 0.0;
  double median_rel_error = 0.0;
  double p99_rel_error = 0.0;
  std::uint64_t worst_index = 0;
  std::uint64_t worst_seed = 0;
  bool pass = true;
};

std::vector<BatchRecord> run_batch_records(const BatchOptions& options);
BatchStats summarize_batch(const std::vector<BatchRecord>& records, double max_rel_bound);
BatchStats run_batch(const BatchOptions& options);

nlohmann::json to_json(const BatchStats& stats, const BatchOptions& options);

/// Calls fn(i) for every i in [0, count), split into contiguous index
/// ranges over `workers` threads.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lcroots
