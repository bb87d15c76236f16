#include "clusvul/clustering.hpp"

#include <algorithm>
#include <numeric>

#include "clusvul/errors.hpp"

namespace clusvul {

std::uint64_t TriangleIndex::total() const {
  return std::accumulate(per_vertex.begin(), per_vertex.end(), std::uint64_t{0}) / 3;
}

TriangleIndex build_triangle_index(const Graph& g) {
  const std::size_t n = g.num_vertices();
  TriangleIndex idx;
  idx.per_vertex.assign(n, 0);
  idx.per_edge.assign(g.num_edges_total(), 0);

  // Rank alive vertices so that rank(u) < rank(v) implies d(u) <= d(v).
  std::vector<VertexId> order = g.alive_vertices();
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  std::vector<std::uint32_t> rank(n, 0);
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  // A(v) holds (rank of w, edge id of {v, w}) for already-processed higher-ranked
  // neighbors w. Vertices are processed from the highest rank down, so every A(v)
  // is filled in strictly decreasing rank order.
  struct Entry {
    std::uint32_t rank;
    EdgeId edge;
  };
  std::vector<std::vector<Entry>> seen(n);

  for (std::size_t r = order.size(); r-- > 0;) {
    const VertexId u = order[r];
    g.for_each_incident(u, [&](VertexId v, EdgeId uv) {
      if (rank[v] >= r) return;
      const auto& au = seen[u];
      const auto& av = seen[v];
      std::size_t i = 0, j = 0;
      while (i < au.size() && j < av.size()) {
        if (au[i].rank == av[j].rank) {
          const VertexId w = order[au[i].rank];
          ++idx.per_edge[uv];
          ++idx.per_edge[au[i].edge];
          ++idx.per_edge[av[j].edge];
          ++idx.per_vertex[u];
          ++idx.per_vertex[v];
          ++idx.per_vertex[w];
          ++i;
          ++j;
        } else if (au[i].rank > av[j].rank) {
          ++i;
        } else {
          ++j;
        }
      }
      seen[v].push_back({static_cast<std::uint32_t>(r), uv});
    });
  }
  return idx;
}

std::uint64_t triangles_at(const Graph& g, VertexId u) {
  const auto nbrs = g.neighbors(u);
  std::uint64_t twice = 0;
  for (VertexId v : nbrs) {
    // Both lists are sorted; count alive common neighbors.
    const auto av = g.adjacency(v);
    std::size_t i = 0, j = 0;
    while (i < nbrs.size() && j < av.size()) {
      if (nbrs[i] == av[j]) {
        ++twice;
        ++i;
        ++j;
      } else if (nbrs[i] < av[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return twice / 2;
}

namespace {

void require_alive(const Graph& g, VertexId u, const char* op) {
  if (!g.alive(u)) {
    throw DomainError(std::string(op) + ": vertex " + std::to_string(u) + " is dead or out of range");
  }
}

void require_nonempty(const Graph& g, const char* op) {
  if (g.num_alive() == 0) throw DomainError(std::string(op) + ": graph has no alive vertices");
}

}  // namespace

double local_cc(const Graph& g, VertexId u) {
  require_alive(g, u, "local_cc");
  return lcc_value(triangles_at(g, u), g.degree(u));
}

double alcc(const Graph& g, const TriangleIndex& idx) {
  require_nonempty(g, "alcc");
  double sum = 0.0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (g.alive(u)) sum += lcc_value(idx.per_vertex[u], g.degree(u));
  }
  return sum / static_cast<double>(g.num_alive());
}

double max_lcc(const Graph& g, const TriangleIndex& idx) {
  require_nonempty(g, "max_lcc");
  double best = 0.0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (g.alive(u)) best = std::max(best, lcc_value(idx.per_vertex[u], g.degree(u)));
  }
  return best;
}

double alcc(const Graph& g) {
  require_nonempty(g, "alcc");
  return alcc(g, build_triangle_index(g));
}

double max_lcc(const Graph& g) {
  require_nonempty(g, "max_lcc");
  return max_lcc(g, build_triangle_index(g));
}

bool is_triangle_free(const Graph& g) { return build_triangle_index(g).total() == 0; }

double alcc_without(const Graph& g, VertexId u) {
  require_alive(g, u, "alcc_without");
  if (g.num_alive() < 2) throw DomainError("alcc_without: needs at least two alive vertices");
  return alcc(without_vertex(g, u));
}

}  // namespace clusvul
