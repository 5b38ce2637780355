#include "suc/solver.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <deque>
#include <limits>
#include <queue>
#include <stdexcept>

namespace suc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Label {
  FullResource res;
  VertexId vertex;
  std::int32_t parent; // index into the pool, -1 for the root
  ArcId via_arc;
};

struct QueueItem {
  double key;
  std::uint64_t seq; // FIFO tie-break for determinism
  std::int32_t label;

  bool operator>(const QueueItem& o) const {
    if (key != o.key) return key > o.key;
    return seq > o.seq;
  }
};

} // namespace

AlgoConfig preset_config(Preset p) {
  switch (p) {
    case Preset::V0:
      return {Strategy::LabelSetting, KeyKind::EarlyDate, true, false, false};
    case Preset::V1:
      return {Strategy::LabelSetting, KeyKind::EarlyDate, true, true, false};
    case Preset::V2:
      return {Strategy::LabelCorrecting, KeyKind::Cost, true, false, false};
    case Preset::V3:
      return {Strategy::LabelCorrecting, KeyKind::CostPlusBound, true, true,
              false};
    case Preset::KeyOnly:
      return {Strategy::LabelCorrecting, KeyKind::CostPlusBound, true, false,
              false};
    case Preset::TestOnly:
      return {Strategy::LabelCorrecting, KeyKind::Cost, true, true, false};
  }
  throw std::invalid_argument("unknown preset");
}

std::string_view preset_name(Preset p) {
  switch (p) {
    case Preset::V0: return "v0";
    case Preset::V1: return "v1";
    case Preset::V2: return "v2";
    case Preset::V3: return "v3";
    case Preset::KeyOnly: return "key-only";
    case Preset::TestOnly: return "test-only";
  }
  return "?";
}

std::optional<Preset> preset_from_name(std::string_view name) {
  for (Preset p : all_presets()) {
    if (preset_name(p) == name) return p;
  }
  return std::nullopt;
}

std::string_view strategy_name(Strategy s) {
  return s == Strategy::LabelSetting ? "label setting" : "label correcting";
}

std::string_view key_name(KeyKind k) {
  switch (k) {
    case KeyKind::EarlyDate: return "early date";
    case KeyKind::Cost: return "cost";
    case KeyKind::CostPlusBound: return "cost+bound";
  }
  return "?";
}

std::string_view tests_name(const AlgoConfig& cfg) {
  if (cfg.use_dom && cfg.use_low) return "Dom & Low";
  if (cfg.use_dom) return "Dom";
  if (cfg.use_low) return "Low";
  return "none";
}

bool dominance_admits(std::span<const FullResource> frontier,
                      const FullResource& candidate) {
  for (const FullResource& r : frontier) {
    if (leq(r, candidate)) return false;
  }
  return true;
}

bool lower_bound_admits(const FullResource& res, const FullResource& bound,
                        double upper_bound, const Limits& limits,
                        const TauParams& taus) {
  const FullResource projected = oplus(res, bound, taus);
  return rho(projected, limits) == 0 && projected.cost <= upper_bound;
}

double label_key(const FullResource& res, VertexId v, const AlgoConfig& cfg,
                 const Digraph& g, const BoundsTable* bounds) {
  switch (cfg.key) {
    case KeyKind::EarlyDate:
      return static_cast<double>(g.vertex_time(v));
    case KeyKind::Cost:
      return res.cost;
    case KeyKind::CostPlusBound:
      return oplus(res, bounds->at[static_cast<std::size_t>(v)], g.taus()).cost;
  }
  return 0.0;
}

SolveResult solve(const Digraph& g, const Limits& limits, const AlgoConfig& cfg,
                  const BoundsTable* bounds) {
  if (!g.finalized()) throw GraphError("solve: digraph not finalized");
  if (cfg.needs_bounds()) {
    if (bounds == nullptr) {
      throw std::invalid_argument("solve: configuration requires bounds");
    }
    if (bounds->at.size() != static_cast<std::size_t>(g.vertex_count())) {
      throw std::invalid_argument("solve: bounds table size mismatch");
    }
  }
  const auto start = Clock::now();

  SolveResult out;
  SolveStats& st = out.stats;
  if (cfg.trace_arcs) out.arc_extensions.assign(g.arcs().size(), 0);

  const TauParams& taus = g.taus();
  std::deque<Label> pool;
  double ub = std::numeric_limits<double>::infinity();
  std::int32_t best = -1;

  const auto bound_at = [&](VertexId v) -> const FullResource& {
    return bounds->at[static_cast<std::size_t>(v)];
  };
  const auto frontier_dominates = [&](const std::vector<std::int32_t>& fr,
                                      const FullResource& res) {
    for (std::int32_t fid : fr) {
      if (leq(pool[static_cast<std::size_t>(fid)].res, res)) return true;
    }
    return false;
  };

  if (cfg.strategy == Strategy::LabelCorrecting) {
    std::vector<std::vector<std::int32_t>> frontier(
        static_cast<std::size_t>(g.vertex_count()));
    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> queue;
    std::uint64_t seq = 0;

    pool.push_back(Label{FullResource{}, g.origin(), -1, -1});
    queue.push(QueueItem{label_key(pool[0].res, g.origin(), cfg, g, bounds),
                         seq++, 0});

    while (!queue.empty()) {
      const std::int32_t li = queue.top().label;
      queue.pop();
      ++st.iterations;
      const VertexId v = pool[static_cast<std::size_t>(li)].vertex;
      const FullResource& res = pool[static_cast<std::size_t>(li)].res;

      if (v == g.destination()) {
        ++st.od_paths;
        if (rho(res, limits) == 0 && res.cost < ub) {
          ub = res.cost;
          best = li;
        }
        continue;
      }
      if (cfg.use_dom) {
        auto& fr = frontier[static_cast<std::size_t>(v)];
        if (frontier_dominates(fr, res)) {
          ++st.discarded_dom;
          continue;
        }
        std::erase_if(fr, [&](std::int32_t fid) {
          return leq(res, pool[static_cast<std::size_t>(fid)].res);
        });
        fr.push_back(li);
      }
      if (cfg.use_low &&
          !lower_bound_admits(res, bound_at(v), ub, limits, taus)) {
        ++st.discarded_low;
        continue;
      }
      for (ArcId a : g.out_arcs(v)) {
        const Arc& arc = g.arc(a);
        // Without bounds there is no test that removes labels stuck in a
        // dead end; skip those extensions up front.
        if (bounds == nullptr && arc.head != g.destination() &&
            g.out_arcs(arc.head).empty()) {
          continue;
        }
        pool.push_back(Label{oplus(res, arc.res, taus), arc.head, li, a});
        if (cfg.trace_arcs) ++out.arc_extensions[static_cast<std::size_t>(a)];
        const std::int32_t child = static_cast<std::int32_t>(pool.size() - 1);
        queue.push(QueueItem{
            label_key(pool[static_cast<std::size_t>(child)].res, arc.head, cfg,
                      g, bounds),
            seq++, child});
      }
    }
  } else {
    // Label setting: vertices are processed once, in topological order, so
    // every label at a vertex exists before the vertex is extended.
    std::vector<std::vector<std::int32_t>> bucket(
        static_cast<std::size_t>(g.vertex_count()));
    std::vector<char> settled(static_cast<std::size_t>(g.vertex_count()), 0);
    pool.push_back(Label{FullResource{}, g.origin(), -1, -1});
    bucket[static_cast<std::size_t>(g.origin())].push_back(0);

    std::vector<std::int32_t> nondominated;
    for (VertexId v : g.topo_order()) {
      settled[static_cast<std::size_t>(v)] = 1;
      auto& bk = bucket[static_cast<std::size_t>(v)];
      if (bk.empty()) continue;

      if (v == g.destination()) {
        for (std::int32_t li : bk) {
          ++st.iterations;
          ++st.od_paths;
          const FullResource& res = pool[static_cast<std::size_t>(li)].res;
          if (rho(res, limits) == 0 && res.cost < ub) {
            ub = res.cost;
            best = li;
          }
        }
        continue;
      }

      nondominated.clear();
      for (std::int32_t li : bk) {
        ++st.iterations;
        const FullResource& res = pool[static_cast<std::size_t>(li)].res;
        if (cfg.use_dom) {
          if (frontier_dominates(nondominated, res)) {
            ++st.discarded_dom;
            continue;
          }
          const std::size_t before = nondominated.size();
          std::erase_if(nondominated, [&](std::int32_t fid) {
            return leq(res, pool[static_cast<std::size_t>(fid)].res);
          });
          st.discarded_dom +=
              static_cast<std::int64_t>(before - nondominated.size());
        }
        nondominated.push_back(li);
      }

      for (std::int32_t li : nondominated) {
        const FullResource& res = pool[static_cast<std::size_t>(li)].res;
        if (cfg.use_low &&
            !lower_bound_admits(res, bound_at(v), ub, limits, taus)) {
          ++st.discarded_low;
          continue;
        }
        for (ArcId a : g.out_arcs(v)) {
          const Arc& arc = g.arc(a);
          if (bounds == nullptr && arc.head != g.destination() &&
              g.out_arcs(arc.head).empty()) {
            continue;
          }
          assert(!settled[static_cast<std::size_t>(arc.head)]);
          pool.push_back(Label{oplus(res, arc.res, taus), arc.head, li, a});
          if (cfg.trace_arcs) ++out.arc_extensions[static_cast<std::size_t>(a)];
          bucket[static_cast<std::size_t>(arc.head)].push_back(
              static_cast<std::int32_t>(pool.size() - 1));
        }
      }
      bk.clear();
      bk.shrink_to_fit();
    }
  }

  if (best >= 0) {
    Solution sol;
    sol.cost = ub;
    for (std::int32_t cur = best;
         pool[static_cast<std::size_t>(cur)].parent >= 0;
         cur = pool[static_cast<std::size_t>(cur)].parent) {
      sol.arcs.push_back(pool[static_cast<std::size_t>(cur)].via_arc);
    }
    std::reverse(sol.arcs.begin(), sol.arcs.end());
    out.solution = std::move(sol);
  }
  st.solve_time_ms = ms_since(start);
  return out;
}

SolveResult run_preset(const Digraph& g, const Limits& limits, Preset p,
                       bool trace_arcs) {
  AlgoConfig cfg = preset_config(p);
  cfg.trace_arcs = trace_arcs;
  BoundsTable bounds;
  const BoundsTable* bounds_ptr = nullptr;
  double bound_ms = 0.0;
  if (cfg.needs_bounds()) {
    const auto start = Clock::now();
    bounds = compute_bounds(g);
    bound_ms = ms_since(start);
    bounds_ptr = &bounds;
  }
  SolveResult result = solve(g, limits, cfg, bounds_ptr);
  result.stats.bound_time_ms = bound_ms;
  result.stats.solve_time_ms += bound_ms;
  return result;
}

} // namespace suc
