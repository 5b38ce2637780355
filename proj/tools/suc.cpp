// Command line for the single unit commitment solver: solve one instance,
// benchmark the algorithm presets on a corpus, generate synthetic corpora
// and export the explored-search-space drawing.

#include "suc/bench.hpp"
#include "suc/generator.hpp"
#include "suc/io.hpp"
#include "suc/model.hpp"
#include "suc/rng.hpp"
#include "suc/solver.hpp"
#include "suc/viz.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

std::string fmt_cost(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

suc::Preset parse_preset(const std::string& name) {
  const auto p = suc::preset_from_name(name);
  if (!p) {
    throw CLI::ValidationError("--algo",
                               "unknown algorithm preset '" + name + "'");
  }
  return *p;
}

suc::Instance load_validated(const fs::path& file) {
  suc::Instance inst = suc::read_instance(file);
  const auto violations = suc::validate_instance(inst);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << file.string() << ": invalid instance:";
    for (const auto& v : violations) {
      msg << "\n  " << v.where << ": " << v.message;
    }
    throw std::runtime_error(msg.str());
  }
  return inst;
}

void print_stats(const suc::SolveStats& st) {
  std::cout << "iterations: " << st.iterations << "\n"
            << "discarded_dom: " << st.discarded_dom << "\n"
            << "discarded_low: " << st.discarded_low << "\n"
            << "od_paths: " << st.od_paths << "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", st.solve_time_ms);
  std::cout << "solve_time_ms: " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.3f", st.bound_time_ms);
  std::cout << "bound_time_ms: " << buf << "\n";
}

int cmd_solve(const std::string& instance_file, const std::string& algo,
              bool with_stats, const std::string& plan_out) {
  const suc::Instance inst = load_validated(instance_file);
  const suc::SucGraph sg = suc::build_digraph(inst);
  const suc::SolveResult result =
      suc::run_preset(sg.graph, inst.limits, parse_preset(algo));

  const bool feasible = result.solution.has_value();
  std::cout << "status: " << (feasible ? "optimal" : "infeasible") << "\n";
  std::cout << "cost: "
            << fmt_cost(feasible ? result.solution->cost
                                 : std::numeric_limits<double>::infinity())
            << "\n";
  if (with_stats) print_stats(result.stats);
  if (feasible && !plan_out.empty()) {
    const suc::ProductionPlan plan =
        suc::path_to_plan(sg, inst, result.solution->arcs);
    suc::write_plan(plan, result.solution->cost, plan_out);
  }
  return feasible ? kExitOk : kExitInfeasible;
}

int cmd_bench(const std::string& corpus_dir, const std::string& presets_csv,
              int reps, const std::string& out_file) {
  std::vector<suc::Preset> presets;
  {
    std::stringstream ss(presets_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) presets.push_back(parse_preset(token));
    }
  }

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<std::pair<std::string, suc::Instance>> corpus;
  for (const fs::path& file : files) {
    try {
      corpus.emplace_back(file.filename().string(), load_validated(file));
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping " << file.string() << ": " << e.what()
                << "\n";
    }
  }
  if (corpus.empty()) {
    throw std::runtime_error("bench: no usable instance in " + corpus_dir);
  }

  suc::BenchOptions options;
  options.presets = presets;
  options.reps = reps;
  const suc::BenchReport report = suc::run_bench(corpus, options);

  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_file);
    out << suc::bench_csv(report);
  }
  std::cout << suc::bench_table(report);
  std::cout << "instances: " << corpus.size() << ", reps: " << reps
            << "; iterations = labels processed, solving time includes bound "
               "computation\n";
  return report.costs_agree ? kExitOk : kExitInputError;
}

suc::GeneratorParams params_from_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + file);
  nlohmann::json j;
  in >> j;
  suc::GeneratorParams p;
  const auto get_int = [&](const char* key, int& slot) {
    if (j.contains(key)) slot = j.at(key).get<int>();
  };
  const auto get_range = [&](const char* key, suc::IntRange& slot) {
    if (j.contains(key)) {
      slot.lo = j.at(key).at(0).get<int>();
      slot.hi = j.at(key).at(1).get<int>();
    }
  };
  const auto get_double = [&](const char* key, double& slot) {
    if (j.contains(key)) slot = j.at(key).get<double>();
  };
  get_int("horizon", p.horizon);
  get_int("online_layers", p.online_layers);
  get_int("levels_per_layer", p.levels_per_layer);
  get_range("layer_change_duration", p.layer_change_duration);
  get_range("startup_duration", p.startup_duration);
  get_range("shutdown_duration", p.shutdown_duration);
  get_range("tau_lay", p.tau_lay);
  get_range("tau_mod", p.tau_mod);
  get_range("max_startups", p.max_startups);
  get_range("max_layer_changes", p.max_layer_changes);
  get_range("max_deep", p.max_deep);
  get_double("price_base", p.price_base);
  get_double("price_amplitude", p.price_amplitude);
  get_double("price_noise", p.price_noise);
  get_int("price_period", p.price_period);
  return p;
}

int cmd_generate(const std::string& out_dir, int count, std::uint64_t seed,
                 const std::string& params_file,
                 const std::optional<int>& horizon,
                 const std::optional<int>& layers,
                 const std::optional<int>& levels_per_layer) {
  suc::GeneratorParams params =
      params_file.empty() ? suc::GeneratorParams{} : params_from_file(params_file);
  if (horizon) params.horizon = *horizon;
  if (layers) params.online_layers = *layers;
  if (levels_per_layer) params.levels_per_layer = *levels_per_layer;
  suc::validate_params(params);

  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    params.seed = suc::Rng::derive(seed, static_cast<std::uint64_t>(i));
    const suc::Instance inst = suc::generate_instance(params);
    char name[32];
    std::snprintf(name, sizeof(name), "instance_%04d.json", i);
    suc::write_instance(inst, fs::path(out_dir) / name);
  }
  std::cout << "wrote " << count << " instance(s) to " << out_dir << "\n";
  return kExitOk;
}

int cmd_viz(const std::string& instance_file, const std::string& algo,
            const std::string& out_file) {
  const suc::Instance inst = load_validated(instance_file);
  const suc::SucGraph sg = suc::build_digraph(inst);
  const suc::SolveResult result = suc::run_preset(
      sg.graph, inst.limits, parse_preset(algo), /*trace_arcs=*/true);
  const std::string svg = suc::render_search_svg(
      inst, sg, result.arc_extensions,
      result.solution ? &*result.solution : nullptr);
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_file);
  out << svg;
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal single unit commitment solver over time-expanded "
               "graphs (label setting / correcting with dominance and "
               "lower-bound pruning)"};
  app.require_subcommand(1);

  std::string instance_file, algo = "v3", plan_out, out_file;
  bool with_stats = false;
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  solve->add_option("--instance", instance_file, "Instance JSON file")
      ->required();
  solve->add_option("--algo", algo,
                    "Preset: v0, v1, v2, v3, key-only or test-only");
  solve->add_flag("--stats", with_stats, "Print run statistics");
  solve->add_option("--plan-out", plan_out, "Write the optimal plan as JSON");

  std::string corpus_dir, presets_csv = "v0,v1,v2,v3,key-only,test-only";
  int reps = 5;
  auto* bench = app.add_subcommand("bench", "Benchmark presets on a corpus");
  bench->add_option("--corpus", corpus_dir, "Directory of instance files")
      ->required();
  bench->add_option("--presets", presets_csv, "Comma-separated preset list");
  bench->add_option("--reps", reps, "Timing repetitions per run (median)");
  bench->add_option("--out", out_file, "CSV output file");

  std::string gen_dir, params_file;
  int count = 1;
  std::uint64_t seed = 1;
  std::optional<int> opt_horizon, opt_layers, opt_levels;
  auto* generate =
      app.add_subcommand("generate", "Generate a synthetic instance corpus");
  generate->add_option("--out", gen_dir, "Output directory")->required();
  generate->add_option("--count", count, "Number of instances");
  generate->add_option("--seed", seed, "Master seed");
  generate->add_option("--params", params_file, "Generator params JSON file");
  generate->add_option("--horizon", opt_horizon, "Time horizon T");
  generate->add_option("--layers", opt_layers, "Online layers");
  generate->add_option("--levels-per-layer", opt_levels, "Levels per layer");

  std::string viz_instance, viz_algo = "v3", viz_out;
  auto* viz = app.add_subcommand("viz", "Export the explored search space");
  viz->add_option("--instance", viz_instance, "Instance JSON file")->required();
  viz->add_option("--algo", viz_algo, "Preset to trace");
  viz->add_option("--out", viz_out, "SVG output file")->required();

  try {
    app.parse(argc, argv);
    if (solve->parsed()) {
      return cmd_solve(instance_file, algo, with_stats, plan_out);
    }
    if (bench->parsed()) {
      return cmd_bench(corpus_dir, presets_csv, reps, out_file);
    }
    if (generate->parsed()) {
      return cmd_generate(gen_dir, count, seed, params_file, opt_horizon,
                          opt_layers, opt_levels);
    }
    if (viz->parsed()) return cmd_viz(viz_instance, viz_algo, viz_out);
    return kExitInputError;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
