#include "suc/oracle.hpp"

#include <limits>

namespace suc {

namespace {

void dfs_paths(const Digraph& g, VertexId v, std::vector<ArcId>& prefix,
               PathSet& out, std::int64_t max_paths) {
  if (v == g.destination()) {
    if (static_cast<std::int64_t>(out.paths.size()) >= max_paths) {
      throw OracleError("enumerate_paths: more than " +
                        std::to_string(max_paths) + " o-d paths");
    }
    out.paths.push_back(prefix);
    return;
  }
  for (ArcId a : g.out_arcs(v)) {
    prefix.push_back(a);
    dfs_paths(g, g.arc(a).head, prefix, out, max_paths);
    prefix.pop_back();
  }
}

} // namespace

PathSet enumerate_paths(const Digraph& g, std::int64_t max_paths) {
  if (!g.finalized()) throw GraphError("enumerate_paths: digraph not finalized");
  PathSet out;
  std::vector<ArcId> prefix;
  dfs_paths(g, g.origin(), prefix, out, max_paths);
  return out;
}

std::vector<std::int64_t> count_paths_to_destination(const Digraph& g) {
  std::vector<std::int64_t> count(static_cast<std::size_t>(g.vertex_count()), 0);
  count[static_cast<std::size_t>(g.destination())] = 1;
  const auto topo = g.topo_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexId v = *it;
    if (v == g.destination()) continue;
    std::int64_t total = 0;
    for (ArcId a : g.out_arcs(v)) {
      total += count[static_cast<std::size_t>(g.arc(a).head)];
    }
    count[static_cast<std::size_t>(v)] = total;
  }
  return count;
}

std::int64_t count_paths(const Digraph& g) {
  return count_paths_to_destination(g)[static_cast<std::size_t>(g.origin())];
}

BruteForceResult brute_force_solve(const Instance& inst,
                                   std::int64_t max_paths) {
  const SucGraph sg = build_digraph(inst);
  const PathSet all = enumerate_paths(sg.graph, max_paths);

  BruteForceResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (const auto& path : all.paths) {
    const ProductionPlan plan = path_to_plan(sg, inst, path);
    if (!check_plan(plan, inst).feasible()) continue;
    const double cost = plan_cost(plan, inst);
    if (!best.feasible || cost < best.cost) {
      best.feasible = true;
      best.cost = cost;
      best.plan = plan;
      best.path = path;
    }
  }
  return best;
}

} // namespace suc
