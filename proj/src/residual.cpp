#include "clusvul/residual.hpp"

#include <limits>

#include "clusvul/errors.hpp"

namespace clusvul {

ResidualGraph::ResidualGraph(Graph g)
    : graph_(std::move(g)), index_(build_triangle_index(graph_)), mark_(graph_.num_vertices(), 0) {}

void ResidualGraph::remove(VertexId u) {
  if (!graph_.alive(u)) throw DomainError("remove: vertex " + std::to_string(u) + " is not alive");
  if (++stamp_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(mark_.begin(), mark_.end(), 0);
    stamp_ = 1;
  }
  graph_.for_each_neighbor(u, [&](VertexId v) { mark_[v] = stamp_; });

  auto& t = index_.per_vertex;
  auto& tr = index_.per_edge;
  graph_.for_each_incident(u, [&](VertexId v, EdgeId uv) {
    t[v] -= tr[uv];
    if (tr[uv] != 0) {
      // Every edge {v, w} with w also adjacent to u loses the triangle {u, v, w}.
      graph_.for_each_incident(v, [&](VertexId w, EdgeId vw) {
        if (v < w && mark_[w] == stamp_) --tr[vw];
      });
    }
    tr[uv] = 0;
  });
  t[u] = 0;
  graph_.remove_vertex(u);
}

}  // namespace clusvul
