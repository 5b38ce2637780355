#pragma once

#include "suc/digraph.hpp"
#include "suc/instance.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace suc {

class ModelError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Time-expanded digraph of an instance together with the bookkeeping needed
/// to map paths back to production plans.
///
/// Vertex layout: (level_index, t) -> level_index * T + (t - 1), then the
/// origin and the destination. Arcs are laid out per transition in
/// increasing t, so the arc of transition index a at time t has id
/// transition_arc_base[a] + (t - 1); the initial arc and the final arcs
/// (one per level, in level order) follow.
struct SucGraph {
  Digraph graph;

  struct ArcInfo {
    enum class Kind : std::uint8_t { Initial, Transition, Final };
    Kind kind = Kind::Transition;
    std::int32_t transition = -1; // transition index, Kind::Transition only
    std::int32_t t = 0;           // departure time step
  };
  std::vector<ArcInfo> arc_info;
  std::vector<ArcId> transition_arc_base;
  ArcId initial_arc = -1;
  ArcId final_arc_base = -1;
  int horizon = 0;
  int level_count = 0;

  VertexId vertex(int level_idx, int t) const {
    return static_cast<VertexId>(level_idx * horizon + (t - 1));
  }
  int level_of(VertexId v) const { return static_cast<int>(v) / horizon; }
  int time_of(VertexId v) const { return static_cast<int>(v) % horizon + 1; }
};

/// Builds the time-expanded digraph with decorated arc resources.
/// Throws ModelError if the instance does not validate.
SucGraph build_digraph(const Instance& inst);

/// Converts an o-d path (arc ids) into the production plan it encodes.
/// Throws ModelError if the arcs do not form an o-d path.
ProductionPlan path_to_plan(const SucGraph& sg, const Instance& inst,
                            std::span<const ArcId> path);

/// Inverse of path_to_plan. Throws ModelError if the plan violates the
/// chaining conditions or refers to unknown data.
std::vector<ArcId> plan_to_path(const SucGraph& sg, const Instance& inst,
                                const ProductionPlan& plan);

struct PlanIssue {
  std::string rule; // "chain", "A", "B", "C", "D" or "E"
  std::string detail;
};

struct PlanReport {
  bool chain_ok = false;
  std::vector<PlanIssue> issues;

  bool feasible() const { return chain_ok && issues.empty(); }
};

/// Direct, graph-free checker: verifies the chaining conditions, the
/// minimum dwell rules (A)/(B) including the dwell owed at t = 1, and the
/// counter limits (C)-(E). Independent of the monoid machinery.
PlanReport check_plan(const ProductionPlan& plan, const Instance& inst);

/// Sum of the cost table entries of the plan. Throws ModelError on an
/// unknown transition or a missing entry.
double plan_cost(const ProductionPlan& plan, const Instance& inst);

} // namespace suc
