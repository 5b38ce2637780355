#pragma once

#include "suc/bounds.hpp"
#include "suc/digraph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace suc {

enum class Strategy { LabelSetting, LabelCorrecting };
enum class KeyKind { EarlyDate, Cost, CostPlusBound };

struct AlgoConfig {
  Strategy strategy = Strategy::LabelCorrecting;
  KeyKind key = KeyKind::Cost;
  bool use_dom = true;
  bool use_low = false;
  /// Records how many labels were extended along each arc. Off by default:
  /// tracing perturbs timing.
  bool trace_arcs = false;

  bool needs_bounds() const {
    return use_low || key == KeyKind::CostPlusBound;
  }
};

/// The algorithm variants compared in the benchmark, plus the two ablations
/// that use bounds only in the key or only in the test.
enum class Preset { V0, V1, V2, V3, KeyOnly, TestOnly };

AlgoConfig preset_config(Preset p);
std::string_view preset_name(Preset p);
std::optional<Preset> preset_from_name(std::string_view name);
constexpr std::array<Preset, 6> all_presets() {
  return {Preset::V0, Preset::V1, Preset::V2,
          Preset::V3, Preset::KeyOnly, Preset::TestOnly};
}

std::string_view strategy_name(Strategy s);
std::string_view key_name(KeyKind k);
std::string_view tests_name(const AlgoConfig& cfg);

/// Run counters. iterations counts labels taken up for processing (extracted
/// from the queue, or read from a vertex bucket when label setting);
/// discarded_* count labels denied extension by each test; od_paths counts
/// labels processed at the destination. solve_time_ms is the total wall time
/// including bound computation when the algorithm uses bounds.
struct SolveStats {
  std::int64_t iterations = 0;
  std::int64_t discarded_dom = 0;
  std::int64_t discarded_low = 0;
  std::int64_t od_paths = 0;
  double solve_time_ms = 0.0;
  double bound_time_ms = 0.0;
};

struct Solution {
  double cost = 0.0;
  std::vector<ArcId> arcs; // origin to destination, in order
};

struct SolveResult {
  std::optional<Solution> solution; // empty: no feasible o-d path
  SolveStats stats;
  std::vector<std::int64_t> arc_extensions; // per arc, when traced
};

/// Enumerates o-d paths with dominance / lower-bound pruning per cfg.
/// Returns a minimum-cost feasible path, or no solution if none exists.
/// The optimal cost does not depend on the configuration.
SolveResult solve(const Digraph& g, const Limits& limits, const AlgoConfig& cfg,
                  const BoundsTable* bounds = nullptr);

/// Computes bounds when the preset needs them, then solves. bound_time_ms is
/// set and included in solve_time_ms.
SolveResult run_preset(const Digraph& g, const Limits& limits, Preset p,
                       bool trace_arcs = false);

/// (Dom): true iff no frontier resource is leq the candidate.
bool dominance_admits(std::span<const FullResource> frontier,
                      const FullResource& candidate);

/// (Low): true iff the bound-completed resource is feasible and its cost is
/// within the current upper bound.
bool lower_bound_admits(const FullResource& res, const FullResource& bound,
                        double upper_bound, const Limits& limits,
                        const TauParams& taus);

/// Ordering value of a label at vertex v under the configured key.
double label_key(const FullResource& res, VertexId v, const AlgoConfig& cfg,
                 const Digraph& g, const BoundsTable* bounds);

} // namespace suc
