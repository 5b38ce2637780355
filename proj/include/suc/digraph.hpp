#pragma once

#include "suc/resource.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace suc {

using VertexId = std::int32_t;
using ArcId = std::int32_t;

class GraphError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arc {
  VertexId tail;
  VertexId head;
  FullResource res;
};

/// Acyclic digraph with one resource per arc, an origin and a destination.
///
/// Arc ids follow insertion order and out-arc lists preserve it, so every
/// traversal of the graph is deterministic. finalize() computes the
/// topological order and rejects cyclic graphs.
class Digraph {
public:
  Digraph(VertexId vertex_count, VertexId origin, VertexId destination,
          TauParams taus);

  ArcId add_arc(VertexId tail, VertexId head, const FullResource& res);

  /// Optional per-vertex time index, used by the early-date key. Vertices
  /// without an explicit time default to their topological position.
  void set_vertex_time(VertexId v, int time);

  void finalize();

  VertexId vertex_count() const { return vertex_count_; }
  VertexId origin() const { return origin_; }
  VertexId destination() const { return destination_; }
  const TauParams& taus() const { return taus_; }
  bool finalized() const { return finalized_; }

  std::span<const Arc> arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }

  std::span<const ArcId> out_arcs(VertexId v) const;
  std::span<const VertexId> topo_order() const;
  int topo_position(VertexId v) const;
  int vertex_time(VertexId v) const;

private:
  void check_vertex(VertexId v, const char* what) const;

  VertexId vertex_count_;
  VertexId origin_;
  VertexId destination_;
  TauParams taus_;
  std::vector<Arc> arcs_;
  std::vector<int> vertex_time_;
  bool finalized_ = false;

  // Built by finalize().
  std::vector<ArcId> out_list_;
  std::vector<std::int32_t> out_start_;
  std::vector<VertexId> topo_;
  std::vector<int> topo_pos_;
};

} // namespace suc
