#pragma once

#include <cstdint>
#include <vector>

#include "clusvul/graph.hpp"

namespace clusvul {

/// Triangle counts of the alive part of a graph.
///
/// `per_vertex[u]` is the number of triangles through u and `per_edge[e]` the
/// number of triangles through edge e (indexed by EdgeId). Dead vertices and
/// edges touching them carry 0.
struct TriangleIndex {
  std::vector<std::uint64_t> per_vertex;
  std::vector<std::uint64_t> per_edge;

  std::uint64_t total() const;

  friend bool operator==(const TriangleIndex&, const TriangleIndex&) = default;
};

/// Forward triangle listing over a degree ordering (ties by id), O(M^{3/2}).
TriangleIndex build_triangle_index(const Graph& g);

/// 2T/(d(d-1)) for degree d > 1, else 0.
inline double lcc_value(std::uint64_t triangles, std::size_t degree) {
  if (degree < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles) /
         (static_cast<double>(degree) * static_cast<double>(degree - 1));
}

/// Number of triangles through u among alive vertices.
std::uint64_t triangles_at(const Graph& g, VertexId u);

double local_cc(const Graph& g, VertexId u);
double alcc(const Graph& g);
double max_lcc(const Graph& g);

/// Average / maximum LCC read off a prebuilt index. The index must match g.
double alcc(const Graph& g, const TriangleIndex& idx);
double max_lcc(const Graph& g, const TriangleIndex& idx);

bool is_triangle_free(const Graph& g);

/// ALCC of g with u removed, by full recomputation.
double alcc_without(const Graph& g, VertexId u);

}  // namespace clusvul
