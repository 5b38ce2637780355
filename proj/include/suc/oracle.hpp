#pragma once

#include "suc/digraph.hpp"
#include "suc/model.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace suc {

class OracleError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every o-d path of an acyclic digraph, as arc-id sequences in
/// lexicographic arc-id order.
struct PathSet {
  std::vector<std::vector<ArcId>> paths;
};

inline constexpr std::int64_t kDefaultMaxPaths = 1'000'000;

/// Depth-first enumeration of all o-d paths. Throws OracleError once more
/// than max_paths paths are found.
PathSet enumerate_paths(const Digraph& g, std::int64_t max_paths = kDefaultMaxPaths);

/// Number of o-d paths, by dynamic programming over the topological order.
std::int64_t count_paths(const Digraph& g);

/// Number of paths from every vertex to the destination.
std::vector<std::int64_t> count_paths_to_destination(const Digraph& g);

struct BruteForceResult {
  bool feasible = false;
  double cost = 0.0; // +infinity when infeasible
  ProductionPlan plan;
  std::vector<ArcId> path;
};

/// Reference solver: enumerates every o-d path, keeps the plans accepted by
/// check_plan and returns the cheapest (ties: lexicographically smallest
/// arc-id sequence, which the enumeration order provides). Deliberately
/// naive; guarded by max_paths.
BruteForceResult brute_force_solve(const Instance& inst,
                                   std::int64_t max_paths = kDefaultMaxPaths);

} // namespace suc
