#include "suc/digraph.hpp"

#include <queue>
#include <string>

namespace suc {

Digraph::Digraph(VertexId vertex_count, VertexId origin, VertexId destination,
                 TauParams taus)
    : vertex_count_(vertex_count),
      origin_(origin),
      destination_(destination),
      taus_(taus),
      vertex_time_(static_cast<std::size_t>(vertex_count), -1) {
  if (vertex_count < 2) throw GraphError("digraph needs at least two vertices");
  check_vertex(origin, "origin");
  check_vertex(destination, "destination");
  if (origin == destination) throw GraphError("origin equals destination");
}

void Digraph::check_vertex(VertexId v, const char* what) const {
  if (v < 0 || v >= vertex_count_) {
    throw GraphError(std::string(what) + " vertex out of range: " +
                     std::to_string(v));
  }
}

ArcId Digraph::add_arc(VertexId tail, VertexId head, const FullResource& res) {
  if (finalized_) throw GraphError("add_arc after finalize");
  check_vertex(tail, "tail");
  check_vertex(head, "head");
  if (tail == head) throw GraphError("self-loop arc");
  arcs_.push_back(Arc{tail, head, res});
  return static_cast<ArcId>(arcs_.size() - 1);
}

void Digraph::set_vertex_time(VertexId v, int time) {
  check_vertex(v, "timed");
  vertex_time_[static_cast<std::size_t>(v)] = time;
}

void Digraph::finalize() {
  if (finalized_) return;
  const auto n = static_cast<std::size_t>(vertex_count_);

  // CSR adjacency, stable in arc id.
  out_start_.assign(n + 1, 0);
  for (const Arc& a : arcs_) ++out_start_[static_cast<std::size_t>(a.tail) + 1];
  for (std::size_t v = 0; v < n; ++v) out_start_[v + 1] += out_start_[v];
  out_list_.assign(arcs_.size(), 0);
  {
    std::vector<std::int32_t> cursor(out_start_.begin(), out_start_.end() - 1);
    for (ArcId a = 0; a < arc_count(); ++a) {
      out_list_[static_cast<std::size_t>(
          cursor[static_cast<std::size_t>(arcs_[a].tail)]++)] = a;
    }
  }

  // Kahn's algorithm, smallest vertex id first for a canonical order.
  std::vector<std::int32_t> indegree(n, 0);
  for (const Arc& a : arcs_) ++indegree[static_cast<std::size_t>(a.head)];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < vertex_count_; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  topo_.clear();
  topo_.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (ArcId a : out_arcs(v)) {
      VertexId h = arcs_[a].head;
      if (--indegree[static_cast<std::size_t>(h)] == 0) ready.push(h);
    }
  }
  if (topo_.size() != n) throw GraphError("digraph contains a cycle");

  topo_pos_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    topo_pos_[static_cast<std::size_t>(topo_[i])] = static_cast<int>(i);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (vertex_time_[v] < 0) vertex_time_[v] = topo_pos_[v];
  }
  finalized_ = true;
}

std::span<const ArcId> Digraph::out_arcs(VertexId v) const {
  const auto b = static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v)]);
  const auto e =
      static_cast<std::size_t>(out_start_[static_cast<std::size_t>(v) + 1]);
  return {out_list_.data() + b, e - b};
}

std::span<const VertexId> Digraph::topo_order() const { return topo_; }

int Digraph::topo_position(VertexId v) const {
  return topo_pos_[static_cast<std::size_t>(v)];
}

int Digraph::vertex_time(VertexId v) const {
  return vertex_time_[static_cast<std::size_t>(v)];
}

} // namespace suc
