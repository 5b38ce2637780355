#pragma once

#include "suc/resource.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace suc {

/// Operating point of the unit. Levels are partitioned into layers and
/// layers into modes; both are plain integer tags.
struct Level {
  int id = 0;
  int layer = 0;
  int mode = 0;
  /// Informational only; not part of the interchange format.
  double power = 0.0;
};

/// Allowed move (from, to) taking tau time steps. The indicator flags feed
/// the three counters of the product resource.
struct Transition {
  int id = 0;
  int from = 0;
  int to = 0;
  Duration tau = 1;
  bool startup = false;
  bool layer_change = false;
  bool deep = false;
};

/// One problem datum: horizon, level/transition structure, minimum dwell
/// parameters, counter limits, the initial level and the cost table.
///
/// tau_init_lay / tau_init_mod give the dwell still owed at t = 1: the unit
/// may leave its initial layer (mode) only from t = 1 + tau_init_*.
struct Instance {
  int horizon = 0;
  std::vector<Level> levels;
  std::vector<Transition> transitions;
  Duration tau_lay = 0;
  Duration tau_mod = 0;
  Duration tau_init_lay = 0;
  Duration tau_init_mod = 0;
  Limits limits;
  int initial_level = 0;
  /// Dense table indexed [transition_index * horizon + (t - 1)];
  /// NaN marks a missing entry.
  std::vector<double> costs;

  int level_index(int id) const;      // -1 if unknown
  int transition_index(int id) const; // -1 if unknown

  bool has_cost(int transition_idx, int t) const {
    return !std::isnan(cost_at(transition_idx, t));
  }
  double cost_at(int transition_idx, int t) const {
    return costs[static_cast<std::size_t>(transition_idx) *
                     static_cast<std::size_t>(horizon) +
                 static_cast<std::size_t>(t - 1)];
  }
  void set_cost(int transition_idx, int t, double value) {
    costs[static_cast<std::size_t>(transition_idx) *
              static_cast<std::size_t>(horizon) +
          static_cast<std::size_t>(t - 1)] = value;
  }

  friend bool operator==(const Instance& a, const Instance& b);
};

/// One step of a production plan: the unit is at `level` at time `t` and
/// takes `transition`. All three are ids.
struct PlanStep {
  int level = 0;
  int t = 0;
  int transition = 0;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

struct ProductionPlan {
  std::vector<PlanStep> steps;

  friend bool operator==(const ProductionPlan&, const ProductionPlan&) = default;
};

struct Violation {
  std::string where;
  std::string message;
};

/// Structural and semantic validation. Returns the full list of violations;
/// an empty list means the instance is well formed. Never throws on
/// malformed data.
std::vector<Violation> validate_instance(const Instance& inst);

} // namespace suc
