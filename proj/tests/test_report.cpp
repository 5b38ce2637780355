#include "suc/bench.hpp"
#include "suc/viz.hpp"

#include "gen_util.hpp"
#include "suc/generator.hpp"
#include "suc/model.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace suc;

namespace {

std::size_t count_needle(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

/// Strips the time-derived columns (solving_time_ms, bound_computation_pct,
/// solving_time_ratio) from a bench CSV.
std::string strip_time_columns(const std::string& csv) {
  std::ostringstream out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i >= 9 && i <= 11) continue;
      out << cells[i] << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::pair<std::string, Instance>> tiny_corpus() {
  std::vector<std::pair<std::string, Instance>> corpus;
  for (std::uint64_t seed : {11ull, 12ull}) {
    corpus.emplace_back("inst" + std::to_string(seed),
                        generate_instance(testgen::small_params(seed)));
  }
  return corpus;
}

} // namespace

TEST_CASE("bench report structure") {
  BenchOptions options;
  options.reps = 1;
  const auto corpus = tiny_corpus();
  const BenchReport report = run_bench(corpus, options);

  CHECK(report.costs_agree);
  CHECK(report.runs.size() == corpus.size() * options.presets.size());

  const std::string csv = bench_csv(report);
  CHECK(csv.rfind("instance,preset,type,key,test,iterations,discarded_dom,"
                  "discarded_low,od_paths,solving_time_ms,"
                  "bound_computation_pct,solving_time_ratio,cost,feasible",
                  0) == 0);

  // v0 is the baseline: its per-run ratio column is exactly 1.00x.
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line); // header
  while (std::getline(in, line)) {
    if (line.find(",v0,") == std::string::npos) continue;
    CHECK(line.find(",1.00x,") != std::string::npos);
  }

  const std::string table = bench_table(report);
  CHECK(table.find("label correcting") != std::string::npos);
  CHECK(table.find("solving time ratio") != std::string::npos);

  // Every preset reports at least one o-d path and the same optimum.
  for (const BenchRun& run : report.runs) {
    CHECK(run.stats.od_paths >= 1);
    CHECK(run.feasible);
  }
}

TEST_CASE("bench output is deterministic apart from wall-clock columns") {
  BenchOptions options;
  options.reps = 1;
  const auto corpus = tiny_corpus();
  const std::string a = strip_time_columns(bench_csv(run_bench(corpus, options)));
  const std::string b = strip_time_columns(bench_csv(run_bench(corpus, options)));
  CHECK(a == b);
}

TEST_CASE("bench rejects an empty corpus") {
  CHECK_THROWS_AS(run_bench({}, BenchOptions{}), std::invalid_argument);
}

TEST_CASE("iteration counts: pruning presets do not explore more") {
  BenchOptions options;
  options.reps = 1;
  const BenchReport report = run_bench(tiny_corpus(), options);
  const auto iterations = [&](const std::string& inst, Preset p) {
    for (const BenchRun& run : report.runs) {
      if (run.instance == inst && run.preset == p) return run.stats.iterations;
    }
    FAIL("missing run");
    return std::int64_t{0};
  };
  for (const auto& [name, inst] : tiny_corpus()) {
    (void)inst;
    CHECK(iterations(name, Preset::V3) <= iterations(name, Preset::V0));
    CHECK(iterations(name, Preset::V3) <= iterations(name, Preset::V1));
    CHECK(iterations(name, Preset::V1) <= iterations(name, Preset::V0));
  }
}

TEST_CASE("svg rendering") {
  SUBCASE("single-path instance draws exactly the chain") {
    Instance inst;
    inst.horizon = 3;
    inst.levels = {Level{0, 0, 0, 0.0}};
    inst.transitions = {Transition{0, 0, 0, 1, false, false, false}};
    inst.tau_lay = 1;
    inst.tau_mod = 1;
    inst.limits = Limits{0, 0, 0};
    inst.initial_level = 0;
    inst.costs.assign(3, std::numeric_limits<double>::quiet_NaN());
    inst.set_cost(0, 1, 1.0);
    inst.set_cost(0, 2, 1.0);

    const SucGraph sg = build_digraph(inst);
    const SolveResult r =
        run_preset(sg.graph, inst.limits, Preset::V0, /*trace_arcs=*/true);
    REQUIRE(r.solution.has_value());
    const std::string svg = render_search_svg(inst, sg, r.arc_extensions,
                                              &*r.solution);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    // o->(s,1)->(s,2)->(s,3)->d: four explored arcs, one optimal polyline.
    CHECK(count_needle(svg, "class=\"arc\"") == 4);
    CHECK(count_needle(svg, "class=\"best\"") == 1);
  }
  SUBCASE("the explored set of v3 is contained in v0's") {
    const Instance inst = generate_instance(testgen::small_params(33));
    const SucGraph sg = build_digraph(inst);
    const SolveResult v0 =
        run_preset(sg.graph, inst.limits, Preset::V0, /*trace_arcs=*/true);
    const SolveResult v3 =
        run_preset(sg.graph, inst.limits, Preset::V3, /*trace_arcs=*/true);
    REQUIRE(v0.arc_extensions.size() == v3.arc_extensions.size());
    // The initial arc is always explored.
    CHECK(v0.arc_extensions[static_cast<std::size_t>(sg.initial_arc)] >= 1);
    CHECK(v3.arc_extensions[static_cast<std::size_t>(sg.initial_arc)] >= 1);
    for (std::size_t a = 0; a < v0.arc_extensions.size(); ++a) {
      if (v3.arc_extensions[a] > 0) CHECK(v0.arc_extensions[a] > 0);
    }
  }
}
