#include "suc/bench.hpp"

#include "suc/model.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace suc {

namespace {

double median(std::vector<double> values) {
  assert(!values.empty());
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

std::string fmt_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double bound_pct(const SolveStats& st) {
  return st.solve_time_ms > 0.0 ? 100.0 * st.bound_time_ms / st.solve_time_ms
                                : 0.0;
}

} // namespace

BenchReport run_bench(
    const std::vector<std::pair<std::string, Instance>>& corpus,
    const BenchOptions& options) {
  if (corpus.empty()) throw std::invalid_argument("bench: empty corpus");
  if (options.presets.empty()) {
    throw std::invalid_argument("bench: no presets selected");
  }
  if (options.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");

  BenchReport report;
  const bool have_v0 =
      std::find(options.presets.begin(), options.presets.end(), Preset::V0) !=
      options.presets.end();
  report.baseline = have_v0 ? Preset::V0 : options.presets.front();

  for (const auto& [name, inst] : corpus) {
    const SucGraph sg = build_digraph(inst);
    double baseline_ms = 0.0;
    double first_cost = 0.0;
    bool first_feasible = false;
    std::vector<BenchRun> instance_runs;

    for (Preset preset : options.presets) {
      SolveResult result;
      std::vector<double> total_ms, bnd_ms;
      for (int rep = 0; rep < options.reps; ++rep) {
        SolveResult r = run_preset(sg.graph, inst.limits, preset);
        total_ms.push_back(r.stats.solve_time_ms);
        bnd_ms.push_back(r.stats.bound_time_ms);
        if (rep == 0) result = std::move(r);
      }
      BenchRun run;
      run.instance = name;
      run.preset = preset;
      run.stats = result.stats;
      run.stats.solve_time_ms = median(total_ms);
      run.stats.bound_time_ms = median(bnd_ms);
      run.feasible = result.solution.has_value();
      run.cost = run.feasible ? result.solution->cost
                              : std::numeric_limits<double>::infinity();
      instance_runs.push_back(run);

      if (preset == report.baseline) baseline_ms = run.stats.solve_time_ms;
      if (instance_runs.size() == 1) {
        first_cost = run.cost;
        first_feasible = run.feasible;
      } else if (run.feasible != first_feasible ||
                 (run.feasible && run.cost != first_cost)) {
        report.costs_agree = false;
      }
    }
    for (BenchRun& run : instance_runs) {
      run.ratio_vs_baseline =
          baseline_ms > 0.0 ? run.stats.solve_time_ms / baseline_ms : 1.0;
      report.runs.push_back(std::move(run));
    }
  }

  for (Preset preset : options.presets) {
    PresetSummary s;
    s.preset = preset;
    std::vector<double> times, pcts;
    for (const BenchRun& run : report.runs) {
      if (run.preset != preset) continue;
      s.iterations += run.stats.iterations;
      s.discarded_dom += run.stats.discarded_dom;
      s.discarded_low += run.stats.discarded_low;
      s.od_paths += run.stats.od_paths;
      times.push_back(run.stats.solve_time_ms);
      pcts.push_back(bound_pct(run.stats));
    }
    s.median_solve_ms = median(times);
    s.median_bound_pct = median(pcts);
    report.summary.push_back(s);
  }
  double baseline_median = 0.0;
  for (const PresetSummary& s : report.summary) {
    if (s.preset == report.baseline) baseline_median = s.median_solve_ms;
  }
  for (PresetSummary& s : report.summary) {
    s.ratio =
        baseline_median > 0.0 ? s.median_solve_ms / baseline_median : 1.0;
  }
  return report;
}

std::string bench_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "instance,preset,type,key,test,iterations,discarded_dom,"
         "discarded_low,od_paths,solving_time_ms,bound_computation_pct,"
         "solving_time_ratio,cost,feasible\n";
  for (const BenchRun& run : report.runs) {
    const AlgoConfig cfg = preset_config(run.preset);
    out << run.instance << ',' << preset_name(run.preset) << ','
        << strategy_name(cfg.strategy) << ',' << key_name(cfg.key) << ','
        << tests_name(cfg) << ',' << run.stats.iterations << ','
        << run.stats.discarded_dom << ',' << run.stats.discarded_low << ','
        << run.stats.od_paths << ',' << fmt_fixed(run.stats.solve_time_ms, 2)
        << ',' << fmt_fixed(bound_pct(run.stats), 1) << ','
        << fmt_fixed(run.ratio_vs_baseline, 2) << 'x' << ','
        << fmt_double(run.cost) << ',' << (run.feasible ? "yes" : "no")
        << '\n';
  }
  return out.str();
}

std::string bench_table(const BenchReport& report) {
  const auto& summary = report.summary;
  std::vector<std::string> header{""};
  for (const PresetSummary& s : summary) {
    header.push_back(std::string(preset_name(s.preset)));
  }

  std::vector<std::vector<std::string>> rows;
  const auto add_row = [&](const std::string& label, auto value_of) {
    std::vector<std::string> row{label};
    for (const PresetSummary& s : summary) row.push_back(value_of(s));
    rows.push_back(std::move(row));
  };
  add_row("type", [](const PresetSummary& s) {
    return std::string(strategy_name(preset_config(s.preset).strategy));
  });
  add_row("key", [](const PresetSummary& s) {
    return std::string(key_name(preset_config(s.preset).key));
  });
  add_row("test", [](const PresetSummary& s) {
    return std::string(tests_name(preset_config(s.preset)));
  });
  add_row("iterations (k, sum)", [](const PresetSummary& s) {
    return fmt_fixed(static_cast<double>(s.iterations) / 1000.0, 1);
  });
  add_row("discarded Dom (k, sum)", [](const PresetSummary& s) {
    return fmt_fixed(static_cast<double>(s.discarded_dom) / 1000.0, 1);
  });
  add_row("discarded Low (k, sum)", [](const PresetSummary& s) {
    return fmt_fixed(static_cast<double>(s.discarded_low) / 1000.0, 1);
  });
  add_row("# od paths (sum)", [](const PresetSummary& s) {
    return std::to_string(s.od_paths);
  });
  add_row("solving time (ms, median)", [](const PresetSummary& s) {
    return fmt_fixed(s.median_solve_ms, 2);
  });
  add_row("bound computation (%, median)", [](const PresetSummary& s) {
    return fmt_fixed(s.median_bound_pct, 1);
  });
  add_row("solving time ratio (median)", [](const PresetSummary& s) {
    return fmt_fixed(s.ratio, 2) + "x";
  });

  std::vector<std::size_t> width(header.size(), 0);
  const auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(header);
  for (const auto& row : rows) widen(row);

  std::ostringstream out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      const std::size_t pad = width[i] - row[i].size();
      if (i == 0) {
        out << row[i] << std::string(pad, ' ');
      } else {
        out << std::string(pad, ' ') << row[i];
      }
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  if (!report.costs_agree) {
    out << "warning: presets disagree on the optimal cost\n";
  }
  return out.str();
}

} // namespace suc
