#include "suc/instance.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace suc {

namespace {

bool cost_tables_equal(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool na = std::isnan(a[i]), nb = std::isnan(b[i]);
    if (na != nb) return false;
    if (!na && a[i] != b[i]) return false;
  }
  return true;
}

bool levels_equal(const std::vector<Level>& a, const std::vector<Level>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].id != b[i].id || a[i].layer != b[i].layer ||
        a[i].mode != b[i].mode || a[i].power != b[i].power) {
      return false;
    }
  }
  return true;
}

bool transitions_equal(const std::vector<Transition>& a,
                       const std::vector<Transition>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].id != b[i].id || a[i].from != b[i].from || a[i].to != b[i].to ||
        a[i].tau != b[i].tau || a[i].startup != b[i].startup ||
        a[i].layer_change != b[i].layer_change || a[i].deep != b[i].deep) {
      return false;
    }
  }
  return true;
}

} // namespace

bool operator==(const Instance& a, const Instance& b) {
  return a.horizon == b.horizon && levels_equal(a.levels, b.levels) &&
         transitions_equal(a.transitions, b.transitions) &&
         a.tau_lay == b.tau_lay && a.tau_mod == b.tau_mod &&
         a.tau_init_lay == b.tau_init_lay && a.tau_init_mod == b.tau_init_mod &&
         a.limits == b.limits && a.initial_level == b.initial_level &&
         cost_tables_equal(a.costs, b.costs);
}

int Instance::level_index(int id) const {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

int Instance::transition_index(int id) const {
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    if (transitions[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  const auto add = [&](std::string where, std::string message) {
    out.push_back(Violation{std::move(where), std::move(message)});
  };

  // A production plan needs at least one transition of duration >= 1 ending
  // exactly at the horizon, so horizons below 2 admit no plan at all.
  if (inst.horizon < 2) {
    add("horizon", "must be at least 2");
    return out;
  }

  std::unordered_map<int, const Level*> level_by_id;
  for (std::size_t i = 0; i < inst.levels.size(); ++i) {
    const Level& s = inst.levels[i];
    if (!level_by_id.emplace(s.id, &s).second) {
      add("levels[" + std::to_string(i) + "]",
          "duplicate level id " + std::to_string(s.id));
    }
  }
  if (inst.levels.empty()) add("levels", "at least one level is required");

  // Every layer must belong to exactly one mode.
  std::unordered_map<int, int> mode_of_layer;
  for (const Level& s : inst.levels) {
    auto [it, inserted] = mode_of_layer.emplace(s.layer, s.mode);
    if (!inserted && it->second != s.mode) {
      add("levels", "layer " + std::to_string(s.layer) +
                        " is assigned to two different modes");
    }
  }

  std::unordered_set<int> transition_ids;
  std::unordered_set<int> has_self;
  for (std::size_t i = 0; i < inst.transitions.size(); ++i) {
    const Transition& tr = inst.transitions[i];
    const std::string where = "transitions[" + std::to_string(i) + "]";
    if (!transition_ids.insert(tr.id).second) {
      add(where, "duplicate transition id " + std::to_string(tr.id));
    }
    const auto from = level_by_id.find(tr.from);
    const auto to = level_by_id.find(tr.to);
    if (from == level_by_id.end()) {
      add(where, "unknown initial level " + std::to_string(tr.from));
    }
    if (to == level_by_id.end()) {
      add(where, "unknown final level " + std::to_string(tr.to));
    }
    if (tr.tau < 1 || tr.tau > inst.horizon - 1) {
      add(where, "duration must lie in [1, horizon-1]");
    }
    if (from != level_by_id.end() && to != level_by_id.end()) {
      const bool layers_differ = from->second->layer != to->second->layer;
      if (tr.layer_change != layers_differ) {
        add(where, layers_differ
                       ? "layers differ but layer_change is false"
                       : "layers are equal but layer_change is true");
      }
      const bool modes_differ = from->second->mode != to->second->mode;
      if (tr.startup && !modes_differ) {
        add(where, "startup transition must change the mode");
      }
      if (tr.from == tr.to && tr.tau == 1) has_self.insert(tr.from);
    }
  }
  for (const Level& s : inst.levels) {
    if (!has_self.count(s.id)) {
      add("transitions",
          "self-transition absent for level " + std::to_string(s.id));
    }
  }

  if (inst.tau_lay < 0) add("tau_lay", "must be non-negative");
  if (inst.tau_mod < 0) add("tau_mod", "must be non-negative");
  if (inst.tau_init_lay < 0) add("tau_init_lay", "must be non-negative");
  if (inst.tau_init_mod < 0) add("tau_init_mod", "must be non-negative");
  if (inst.limits.max_startups < 0) add("limits.startups", "must be non-negative");
  if (inst.limits.max_layer_changes < 0) {
    add("limits.layer_changes", "must be non-negative");
  }
  if (inst.limits.max_deep < 0) add("limits.deep", "must be non-negative");
  if (!level_by_id.count(inst.initial_level)) {
    add("initial_level", "unknown level " + std::to_string(inst.initial_level));
  }

  const std::size_t want =
      inst.transitions.size() * static_cast<std::size_t>(inst.horizon);
  if (inst.costs.size() != want) {
    add("costs", "cost table has wrong size");
    return out;
  }
  for (std::size_t a = 0; a < inst.transitions.size(); ++a) {
    const Transition& tr = inst.transitions[a];
    if (tr.tau < 1 || tr.tau > inst.horizon - 1) continue;
    for (int t = 1; t + tr.tau <= inst.horizon; ++t) {
      const double v = inst.cost_at(static_cast<int>(a), t);
      if (std::isnan(v)) {
        add("costs", "missing entry for transition " + std::to_string(tr.id) +
                         " at t=" + std::to_string(t));
      } else if (!std::isfinite(v)) {
        add("costs", "non-finite entry for transition " +
                         std::to_string(tr.id) + " at t=" + std::to_string(t));
      }
    }
  }
  return out;
}

} // namespace suc
