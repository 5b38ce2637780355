#include "suc/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace suc {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

std::string join(const std::string& path, const char* key) {
  return path.empty() ? key : path + "." + key;
}

const json& member(const json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(join(path, key), "missing required field");
  return *it;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) fail(join(path, item.key().c_str()), "unknown field");
  }
}

long long as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  return v.get<long long>();
}

int as_int32(const json& v, const std::string& path) {
  const long long x = as_int(v, path);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
    fail(path, "integer out of range");
  }
  return static_cast<int>(x);
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected a boolean");
  return v.get<bool>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

const json& as_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  return v;
}

} // namespace

Instance instance_from_json(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  as_object(j, "");
  check_keys(j, "",
             {"horizon", "levels", "transitions", "tau_lay", "tau_mod",
              "tau_init_lay", "tau_init_mod", "limits", "initial_level",
              "costs"});

  Instance inst;
  inst.horizon = as_int32(member(j, "", "horizon"), "horizon");

  const json& levels = as_array(member(j, "", "levels"), "levels");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const std::string path = "levels[" + std::to_string(i) + "]";
    const json& jl = as_object(levels[i], path);
    check_keys(jl, path, {"id", "layer", "mode"});
    Level s;
    s.id = as_int32(member(jl, path, "id"), path + ".id");
    s.layer = as_int32(member(jl, path, "layer"), path + ".layer");
    s.mode = as_int32(member(jl, path, "mode"), path + ".mode");
    inst.levels.push_back(s);
  }

  const json& transitions =
      as_array(member(j, "", "transitions"), "transitions");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string path = "transitions[" + std::to_string(i) + "]";
    const json& jt = as_object(transitions[i], path);
    check_keys(jt, path,
               {"id", "from", "to", "duration", "startup", "layer_change",
                "deep"});
    Transition tr;
    tr.id = as_int32(member(jt, path, "id"), path + ".id");
    tr.from = as_int32(member(jt, path, "from"), path + ".from");
    tr.to = as_int32(member(jt, path, "to"), path + ".to");
    tr.tau = as_int32(member(jt, path, "duration"), path + ".duration");
    tr.startup = as_bool(member(jt, path, "startup"), path + ".startup");
    tr.layer_change =
        as_bool(member(jt, path, "layer_change"), path + ".layer_change");
    tr.deep = as_bool(member(jt, path, "deep"), path + ".deep");
    inst.transitions.push_back(tr);
  }

  inst.tau_lay = as_int32(member(j, "", "tau_lay"), "tau_lay");
  inst.tau_mod = as_int32(member(j, "", "tau_mod"), "tau_mod");
  inst.tau_init_lay = as_int32(member(j, "", "tau_init_lay"), "tau_init_lay");
  inst.tau_init_mod = as_int32(member(j, "", "tau_init_mod"), "tau_init_mod");

  {
    const json& jl = as_object(member(j, "", "limits"), "limits");
    check_keys(jl, "limits", {"startups", "layer_changes", "deep"});
    inst.limits.max_startups =
        as_int32(member(jl, "limits", "startups"), "limits.startups");
    inst.limits.max_layer_changes =
        as_int32(member(jl, "limits", "layer_changes"), "limits.layer_changes");
    inst.limits.max_deep =
        as_int32(member(jl, "limits", "deep"), "limits.deep");
  }

  inst.initial_level =
      as_int32(member(j, "", "initial_level"), "initial_level");

  if (inst.horizon < 1) fail("horizon", "must be positive");
  std::unordered_map<int, int> transition_idx;
  for (std::size_t i = 0; i < inst.transitions.size(); ++i) {
    transition_idx.emplace(inst.transitions[i].id, static_cast<int>(i));
  }
  inst.costs.assign(inst.transitions.size() *
                        static_cast<std::size_t>(inst.horizon),
                    std::numeric_limits<double>::quiet_NaN());

  const json& costs = as_array(member(j, "", "costs"), "costs");
  for (std::size_t i = 0; i < costs.size(); ++i) {
    const std::string path = "costs[" + std::to_string(i) + "]";
    const json& jc = as_object(costs[i], path);
    check_keys(jc, path, {"t", "transition", "value"});
    const int t = as_int32(member(jc, path, "t"), path + ".t");
    const int id =
        as_int32(member(jc, path, "transition"), path + ".transition");
    const double value = as_number(member(jc, path, "value"), path + ".value");
    if (t < 1 || t > inst.horizon) fail(path + ".t", "outside the horizon");
    const auto it = transition_idx.find(id);
    if (it == transition_idx.end()) {
      fail(path + ".transition", "unknown transition id");
    }
    if (inst.has_cost(it->second, t)) fail(path, "duplicate cost entry");
    inst.set_cost(it->second, t, value);
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["horizon"] = inst.horizon;
  j["levels"] = ordered_json::array();
  for (const Level& s : inst.levels) {
    j["levels"].push_back(
        ordered_json{{"id", s.id}, {"layer", s.layer}, {"mode", s.mode}});
  }
  j["transitions"] = ordered_json::array();
  for (const Transition& tr : inst.transitions) {
    j["transitions"].push_back(ordered_json{{"id", tr.id},
                                            {"from", tr.from},
                                            {"to", tr.to},
                                            {"duration", tr.tau},
                                            {"startup", tr.startup},
                                            {"layer_change", tr.layer_change},
                                            {"deep", tr.deep}});
  }
  j["tau_lay"] = inst.tau_lay;
  j["tau_mod"] = inst.tau_mod;
  j["tau_init_lay"] = inst.tau_init_lay;
  j["tau_init_mod"] = inst.tau_init_mod;
  j["limits"] = ordered_json{{"startups", inst.limits.max_startups},
                             {"layer_changes", inst.limits.max_layer_changes},
                             {"deep", inst.limits.max_deep}};
  j["initial_level"] = inst.initial_level;
  j["costs"] = ordered_json::array();
  for (std::size_t a = 0; a < inst.transitions.size(); ++a) {
    for (int t = 1; t <= inst.horizon; ++t) {
      if (!inst.has_cost(static_cast<int>(a), t)) continue;
      j["costs"].push_back(
          ordered_json{{"t", t},
                       {"transition", inst.transitions[a].id},
                       {"value", inst.cost_at(static_cast<int>(a), t)}});
    }
  }
  return j.dump(2) + "\n";
}

Instance read_instance(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str(), file.string());
}

void write_instance(const Instance& inst, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError(file.string() + ": cannot open file for writing");
  out << instance_to_json(inst);
  if (!out) throw ParseError(file.string() + ": write failed");
}

std::string plan_to_json(const ProductionPlan& plan, double cost) {
  ordered_json j;
  j["cost"] = cost;
  j["steps"] = ordered_json::array();
  for (const PlanStep& s : plan.steps) {
    j["steps"].push_back(ordered_json{
        {"level", s.level}, {"t", s.t}, {"transition", s.transition}});
  }
  return j.dump(2) + "\n";
}

void write_plan(const ProductionPlan& plan, double cost,
                const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError(file.string() + ": cannot open file for writing");
  out << plan_to_json(plan, cost);
  if (!out) throw ParseError(file.string() + ": write failed");
}

} // namespace suc
