#pragma once

#include "suc/instance.hpp"
#include "suc/solver.hpp"

#include <string>
#include <vector>

namespace suc {

inline std::vector<Preset> default_presets() {
  const auto a = all_presets();
  return {a.begin(), a.end()};
}

struct BenchOptions {
  std::vector<Preset> presets = default_presets();
  /// Timing repetitions per (instance, preset); the reported time is the
  /// median. Counters come from the first run (they are deterministic).
  int reps = 5;
};

struct BenchRun {
  std::string instance;
  Preset preset = Preset::V0;
  SolveStats stats; // solve_time_ms/bound_time_ms are medians over the reps
  bool feasible = false;
  double cost = 0.0;
  double ratio_vs_baseline = 1.0; // per-instance time ratio against v0
};

struct PresetSummary {
  Preset preset = Preset::V0;
  std::int64_t iterations = 0; // sums over the corpus
  std::int64_t discarded_dom = 0;
  std::int64_t discarded_low = 0;
  std::int64_t od_paths = 0;
  double median_solve_ms = 0.0;
  double median_bound_pct = 0.0;
  double ratio = 1.0; // median time against the baseline preset
};

struct BenchReport {
  std::vector<BenchRun> runs; // instance-major, preset order as requested
  std::vector<PresetSummary> summary;
  Preset baseline = Preset::V0;
  bool costs_agree = true; // every preset found the same optimum per instance
};

/// Runs every preset on every instance, sequentially (timings would skew
/// under contention). Throws std::invalid_argument on an empty corpus.
BenchReport run_bench(const std::vector<std::pair<std::string, Instance>>& corpus,
                      const BenchOptions& options);

/// Per-run CSV. Only the columns derived from wall-clock time vary between
/// identical invocations.
std::string bench_csv(const BenchReport& report);

/// Table with one column per preset, mirroring the row taxonomy of the
/// benchmark: type / key / test, counter sums, median times, bound share and
/// the time ratio against v0.
std::string bench_table(const BenchReport& report);

} // namespace suc
