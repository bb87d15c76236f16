#pragma once

#include <vector>

#include "clusvul/clustering.hpp"
#include "clusvul/graph.hpp"

namespace clusvul {

/// A graph under progressive vertex removal together with its triangle index,
/// kept exact after every removal in O(sum of neighbor degrees).
class ResidualGraph {
 public:
  explicit ResidualGraph(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  const TriangleIndex& index() const noexcept { return index_; }

  std::size_t alive() const noexcept { return graph_.num_alive(); }
  double lcc(VertexId u) const { return lcc_value(index_.per_vertex[u], graph_.degree(u)); }
  double alcc() const { return clusvul::alcc(graph_, index_); }
  double max_lcc() const { return clusvul::max_lcc(graph_, index_); }

  /// Removes u and retires the triangles through it.
  void remove(VertexId u);

 private:
  Graph graph_;
  TriangleIndex index_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

}  // namespace clusvul
