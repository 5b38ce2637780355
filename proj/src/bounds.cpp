#include "suc/bounds.hpp"

namespace suc {

BoundsTable compute_bounds(const Digraph& g) {
  if (!g.finalized()) throw GraphError("compute_bounds: digraph not finalized");
  BoundsTable bounds;
  bounds.at.assign(static_cast<std::size_t>(g.vertex_count()), FullResource{});
  const auto topo = g.topo_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const VertexId v = *it;
    if (v == g.destination()) continue; // empty path: neutral element
    FullResource acc = no_path_bound();
    for (ArcId a : g.out_arcs(v)) {
      const Arc& arc = g.arc(a);
      acc = meet(acc, oplus(arc.res, bounds.at[static_cast<std::size_t>(arc.head)],
                            g.taus()));
    }
    bounds.at[static_cast<std::size_t>(v)] = acc;
  }
  return bounds;
}

} // namespace suc
