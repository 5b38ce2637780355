#pragma once

#include "suc/digraph.hpp"

#include <vector>

namespace suc {

/// Per-vertex lower bounds (under the resource order) on the resource of
/// every path from that vertex to the destination. Vertices with no such
/// path hold the no-path sentinel.
struct BoundsTable {
  std::vector<FullResource> at;
};

/// Computes the bounds in one reverse topological sweep:
///   b_d = neutral,  b_v = meet over arcs (v,w) of res(v,w) (+) b_w.
/// O(|A|) monoid operations.
BoundsTable compute_bounds(const Digraph& g);

} // namespace suc
