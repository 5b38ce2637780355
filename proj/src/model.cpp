#include "suc/model.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <unordered_map>

namespace suc {

namespace {

Duration owed_dwell(Duration tau_min, Duration tau_init) {
  // The initial arc credits the dwell already served: the unit may leave its
  // starting layer/mode once tau_init further steps have elapsed.
  return std::min(tau_init, tau_min);
}

std::string step_str(const PlanStep& s) {
  return "(level " + std::to_string(s.level) + ", t=" + std::to_string(s.t) +
         ", transition " + std::to_string(s.transition) + ")";
}

} // namespace

SucGraph build_digraph(const Instance& inst) {
  if (auto violations = validate_instance(inst); !violations.empty()) {
    throw ModelError("build_digraph: invalid instance: " +
                     violations.front().where + ": " +
                     violations.front().message);
  }
  const int T = inst.horizon;
  const int S = static_cast<int>(inst.levels.size());
  const VertexId origin = static_cast<VertexId>(S * T);
  const VertexId dest = origin + 1;

  SucGraph sg{Digraph(static_cast<VertexId>(S * T + 2), origin, dest,
                      TauParams{inst.tau_lay, inst.tau_mod}),
              {}, {}, -1, -1, T, S};
  Digraph& g = sg.graph;

  for (int s = 0; s < S; ++s) {
    for (int t = 1; t <= T; ++t) g.set_vertex_time(sg.vertex(s, t), t);
  }
  g.set_vertex_time(origin, 0);
  g.set_vertex_time(dest, T + 1);

  std::unordered_map<int, int> level_idx;
  for (int s = 0; s < S; ++s) level_idx.emplace(inst.levels[s].id, s);

  sg.transition_arc_base.resize(inst.transitions.size());
  for (std::size_t a = 0; a < inst.transitions.size(); ++a) {
    const Transition& tr = inst.transitions[a];
    const int from = level_idx.at(tr.from);
    const int to = level_idx.at(tr.to);
    const bool mode_change =
        inst.levels[static_cast<std::size_t>(from)].mode !=
        inst.levels[static_cast<std::size_t>(to)].mode;

    FullResource res;
    res.lay = tr.layer_change ? MinDurResource::change(0, 0)
                              : MinDurResource::stay(tr.tau);
    res.mod = mode_change ? MinDurResource::change(0, 0)
                          : MinDurResource::stay(tr.tau);
    res.startups = tr.startup ? 1 : 0;
    res.layer_changes = tr.layer_change ? 1 : 0;
    res.deep = tr.deep ? 1 : 0;

    sg.transition_arc_base[a] = g.arc_count();
    for (int t = 1; t + tr.tau <= T; ++t) {
      res.cost = inst.cost_at(static_cast<int>(a), t);
      g.add_arc(sg.vertex(from, t), sg.vertex(to, t + tr.tau), res);
      sg.arc_info.push_back(
          {SucGraph::ArcInfo::Kind::Transition, static_cast<std::int32_t>(a), t});
    }
  }

  {
    FullResource res;
    res.lay = MinDurResource::change(
        0, std::max<Duration>(0, inst.tau_lay - inst.tau_init_lay));
    res.mod = MinDurResource::change(
        0, std::max<Duration>(0, inst.tau_mod - inst.tau_init_mod));
    sg.initial_arc =
        g.add_arc(origin, sg.vertex(level_idx.at(inst.initial_level), 1), res);
    sg.arc_info.push_back({SucGraph::ArcInfo::Kind::Initial, -1, 0});
  }

  sg.final_arc_base = g.arc_count();
  for (int s = 0; s < S; ++s) {
    g.add_arc(sg.vertex(s, T), dest, FullResource{});
    sg.arc_info.push_back({SucGraph::ArcInfo::Kind::Final, -1, T});
  }

  g.finalize();
  return sg;
}

ProductionPlan path_to_plan(const SucGraph& sg, const Instance& inst,
                            std::span<const ArcId> path) {
  if (path.size() < 2) throw ModelError("path_to_plan: not an o-d path");
  const Digraph& g = sg.graph;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.arc_count()) {
      throw ModelError("path_to_plan: arc id out of range");
    }
    if (i > 0 && g.arc(path[i - 1]).head != g.arc(path[i]).tail) {
      throw ModelError("path_to_plan: arcs are not contiguous");
    }
  }
  if (sg.arc_info[static_cast<std::size_t>(path.front())].kind !=
      SucGraph::ArcInfo::Kind::Initial) {
    throw ModelError("path_to_plan: path does not start at the origin");
  }
  if (sg.arc_info[static_cast<std::size_t>(path.back())].kind !=
      SucGraph::ArcInfo::Kind::Final) {
    throw ModelError("path_to_plan: path does not end at the destination");
  }

  ProductionPlan plan;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const auto& info = sg.arc_info[static_cast<std::size_t>(path[i])];
    if (info.kind != SucGraph::ArcInfo::Kind::Transition) {
      throw ModelError("path_to_plan: interior arc is not a transition");
    }
    const Transition& tr =
        inst.transitions[static_cast<std::size_t>(info.transition)];
    plan.steps.push_back(PlanStep{tr.from, info.t, tr.id});
  }
  if (plan.steps.empty()) {
    throw ModelError("path_to_plan: path encodes an empty plan");
  }
  return plan;
}

std::vector<ArcId> plan_to_path(const SucGraph& sg, const Instance& inst,
                                const ProductionPlan& plan) {
  if (plan.steps.empty()) throw ModelError("plan_to_path: empty plan");
  std::vector<ArcId> path;
  path.reserve(plan.steps.size() + 2);
  path.push_back(sg.initial_arc);

  int expected_level = inst.initial_level;
  int expected_t = 1;
  for (const PlanStep& step : plan.steps) {
    const int a = inst.transition_index(step.transition);
    if (a < 0) {
      throw ModelError("plan_to_path: unknown transition in " + step_str(step));
    }
    const Transition& tr = inst.transitions[static_cast<std::size_t>(a)];
    if (step.level != expected_level || step.t != expected_t ||
        tr.from != step.level) {
      throw ModelError("plan_to_path: chaining violated at " + step_str(step));
    }
    if (step.t + tr.tau > inst.horizon) {
      throw ModelError("plan_to_path: transition exceeds horizon at " +
                       step_str(step));
    }
    path.push_back(sg.transition_arc_base[static_cast<std::size_t>(a)] +
                   (step.t - 1));
    expected_level = tr.to;
    expected_t = step.t + tr.tau;
  }
  if (expected_t != inst.horizon) {
    throw ModelError("plan_to_path: plan does not end at the horizon");
  }
  const int last_idx = inst.level_index(expected_level);
  assert(last_idx >= 0);
  path.push_back(sg.final_arc_base + last_idx);
  return path;
}

PlanReport check_plan(const ProductionPlan& plan, const Instance& inst) {
  PlanReport report;
  const auto chain_fail = [&](std::string detail) {
    report.issues.push_back(PlanIssue{"chain", std::move(detail)});
  };

  if (plan.steps.empty()) {
    chain_fail("plan is empty");
    return report;
  }

  // Def-1 chaining: resolve each step and make sure levels and times link up.
  struct Resolved {
    const Transition* tr;
    const Level* from;
    const Level* to;
    int t;
  };
  std::vector<Resolved> steps;
  steps.reserve(plan.steps.size());
  for (const PlanStep& step : plan.steps) {
    const int a = inst.transition_index(step.transition);
    if (a < 0) {
      chain_fail("unknown transition in " + step_str(step));
      return report;
    }
    const Transition& tr = inst.transitions[static_cast<std::size_t>(a)];
    const int from = inst.level_index(tr.from);
    const int to = inst.level_index(tr.to);
    if (from < 0 || to < 0) {
      chain_fail("transition with unknown levels in " + step_str(step));
      return report;
    }
    if (tr.from != step.level) {
      chain_fail("transition does not start at the step level in " +
                 step_str(step));
      return report;
    }
    steps.push_back(Resolved{&tr, &inst.levels[static_cast<std::size_t>(from)],
                             &inst.levels[static_cast<std::size_t>(to)],
                             step.t});
  }
  if (plan.steps.front().level != inst.initial_level) {
    chain_fail("plan does not start at the initial level");
  }
  if (plan.steps.front().t != 1) chain_fail("plan does not start at t=1");
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i].to->id != steps[i + 1].from->id) {
      chain_fail("levels do not chain at step " + std::to_string(i + 1));
    }
    if (steps[i].t + steps[i].tr->tau != steps[i + 1].t) {
      chain_fail("times do not chain at step " + std::to_string(i + 1));
    }
  }
  if (steps.back().t + steps.back().tr->tau != inst.horizon) {
    chain_fail("plan does not end at the horizon");
  }
  if (!report.issues.empty()) return report;
  report.chain_ok = true;

  // (A)/(B): dwell between consecutive changes, plus the dwell owed at t=1
  // before the first change (the initial-state credit).
  const auto check_dwell = [&](const char* rule, auto changed, Duration tau_min,
                               Duration tau_init) {
    int prev_arrival = -1; // t_{i+1} of the previous change, -1 before any
    for (std::size_t i = 0; i < steps.size(); ++i) {
      if (!changed(steps[i])) continue;
      if (prev_arrival < 0) {
        const Duration owed = owed_dwell(tau_min, tau_init);
        if (steps[i].t < 1 + owed) {
          report.issues.push_back(PlanIssue{
              rule, "initial dwell not served: first change at t=" +
                        std::to_string(steps[i].t) + ", allowed from t=" +
                        std::to_string(1 + owed)});
        }
      } else if (steps[i].t < prev_arrival + tau_min) {
        report.issues.push_back(PlanIssue{
            rule, "dwell too short: change at t=" + std::to_string(steps[i].t) +
                      " after arrival at t=" + std::to_string(prev_arrival) +
                      " (minimum " + std::to_string(tau_min) + ")"});
      }
      prev_arrival = steps[i].t + steps[i].tr->tau;
    }
  };
  check_dwell(
      "A", [](const Resolved& s) { return s.from->layer != s.to->layer; },
      inst.tau_lay, inst.tau_init_lay);
  check_dwell(
      "B", [](const Resolved& s) { return s.from->mode != s.to->mode; },
      inst.tau_mod, inst.tau_init_mod);

  // (C)-(E): counter sums against the limits.
  Count startups = 0, layer_changes = 0, deep = 0;
  for (const Resolved& s : steps) {
    startups += s.tr->startup ? 1 : 0;
    layer_changes += s.tr->layer_change ? 1 : 0;
    deep += s.tr->deep ? 1 : 0;
  }
  if (startups > inst.limits.max_startups) {
    report.issues.push_back(
        PlanIssue{"C", std::to_string(startups) + " startups exceed limit " +
                           std::to_string(inst.limits.max_startups)});
  }
  if (layer_changes > inst.limits.max_layer_changes) {
    report.issues.push_back(PlanIssue{
        "D", std::to_string(layer_changes) + " layer changes exceed limit " +
                 std::to_string(inst.limits.max_layer_changes)});
  }
  if (deep > inst.limits.max_deep) {
    report.issues.push_back(PlanIssue{
        "E", std::to_string(deep) + " deep transitions exceed limit " +
                 std::to_string(inst.limits.max_deep)});
  }
  return report;
}

double plan_cost(const ProductionPlan& plan, const Instance& inst) {
  double total = 0.0;
  for (const PlanStep& step : plan.steps) {
    const int a = inst.transition_index(step.transition);
    if (a < 0) {
      throw ModelError("plan_cost: unknown transition in " + step_str(step));
    }
    if (step.t < 1 || step.t > inst.horizon || !inst.has_cost(a, step.t)) {
      throw ModelError("plan_cost: no cost entry for " + step_str(step));
    }
    total += inst.cost_at(a, step.t);
  }
  return total;
}

} // namespace suc
