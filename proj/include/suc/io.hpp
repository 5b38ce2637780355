#pragma once

#include "suc/instance.hpp"
#include "suc/model.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace suc {

/// Malformed JSON text. The message carries the line/column reported by the
/// parser.
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed JSON that does not match the instance schema. The message
/// starts with the path of the offending field.
class SchemaError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Instance interchange format: a UTF-8 JSON document with the keys
/// horizon, levels, transitions, tau_lay, tau_mod, tau_init_lay,
/// tau_init_mod, limits, initial_level and costs (sparse triplets).
/// Unknown keys are rejected. See the README for a worked example.
Instance instance_from_json(const std::string& text,
                            const std::string& origin = "<string>");
std::string instance_to_json(const Instance& inst);

Instance read_instance(const std::filesystem::path& file);
void write_instance(const Instance& inst, const std::filesystem::path& file);

/// Serialized production plan: {"cost", "feasible", "steps": [...]}.
std::string plan_to_json(const ProductionPlan& plan, double cost);
void write_plan(const ProductionPlan& plan, double cost,
                const std::filesystem::path& file);

} // namespace suc
