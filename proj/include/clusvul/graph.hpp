#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace clusvul {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct BuildStats {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

/// Undirected simple graph in CSR form with a per-vertex liveness mask.
///
/// The edge set is fixed at construction. Vertices can be logically removed and
/// restored; removal never renumbers survivors, and every degree / neighbor /
/// edge-count query only sees alive vertices. Edges are identified by a dense
/// EdgeId indexing the sorted (u < v) edge list.
class Graph {
 public:
  Graph() = default;

  /// Builds a simple graph on vertices 0..n-1. Self-loops are dropped and
  /// duplicate (including reversed) pairs collapsed; both are tallied in `stats`.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats = nullptr);

  std::size_t num_vertices() const noexcept { return alive_.size(); }
  std::size_t num_alive() const noexcept { return num_alive_; }
  std::size_t num_edges() const noexcept { return num_alive_edges_; }
  std::size_t num_edges_total() const noexcept { return edges_.size(); }

  bool contains(VertexId u) const noexcept { return u < alive_.size(); }
  bool alive(VertexId u) const noexcept { return u < alive_.size() && alive_[u] != 0; }

  /// Number of alive neighbors of u.
  std::size_t degree(VertexId u) const noexcept { return degree_[u]; }

  /// All neighbors of u in the underlying edge set, sorted, dead ones included.
  std::span<const VertexId> adjacency(VertexId u) const noexcept {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  /// Edge ids parallel to adjacency(u).
  std::span<const EdgeId> incident_edges(VertexId u) const noexcept {
    return {edge_of_slot_.data() + offsets_[u], edge_of_slot_.data() + offsets_[u + 1]};
  }

  /// Calls f(v) for every alive neighbor v of u, in ascending id order.
  template <typename F>
  void for_each_neighbor(VertexId u, F&& f) const {
    for (VertexId v : adjacency(u)) {
      if (alive_[v]) f(v);
    }
  }

  /// Calls f(v, edge_id) for every alive neighbor v of u.
  template <typename F>
  void for_each_incident(VertexId u, F&& f) const {
    const auto adj = adjacency(u);
    const auto ids = incident_edges(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (alive_[adj[i]]) f(adj[i], ids[i]);
    }
  }

  std::vector<VertexId> neighbors(VertexId u) const;
  std::vector<VertexId> alive_vertices() const;

  /// Endpoints of edge e, with u < v.
  const Edge& edge(EdgeId e) const noexcept { return edges_[e]; }
  const std::vector<Edge>& edges_total() const noexcept { return edges_; }
  bool edge_alive(EdgeId e) const noexcept { return alive_[edges_[e].u] && alive_[edges_[e].v]; }

  /// Id of the edge {u, v} if it exists in the underlying edge set (liveness ignored).
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  /// True iff u and v are both alive and adjacent.
  bool has_edge(VertexId u, VertexId v) const;

  /// Marks u dead. Throws DomainError if u is out of range or already dead.
  void remove_vertex(VertexId u);
  /// Marks u alive again. Throws DomainError if u is out of range or alive.
  void restore_vertex(VertexId u);

  /// Alive edges as (u < v) pairs in sorted order.
  std::vector<Edge> alive_edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> edge_of_slot_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> degree_;
  std::size_t num_alive_ = 0;
  std::size_t num_alive_edges_ = 0;
};

/// Same alive vertex set, adjacency and edge set.
bool same_structure(const Graph& a, const Graph& b);

struct EdgeListParse {
  Graph graph;
  BuildStats stats;
};

/// Parses a SNAP-style edge list: '#' comment lines, blank lines, and lines holding
/// two non-negative integer ids separated by whitespace. N = max id + 1.
EdgeListParse parse_edge_list(std::string_view text);
EdgeListParse parse_edge_list(std::istream& in);
EdgeListParse read_edge_list_file(const std::string& path);

/// One "u v" line (u < v) per alive edge, sorted.
std::string write_edge_list(const Graph& g);
void write_edge_list(const Graph& g, std::ostream& out);

/// Copy of g in which exactly the vertices of s stay alive (ids preserved).
Graph induced_subgraph(const Graph& g, std::span<const VertexId> s);

/// Copy of g with u removed.
Graph without_vertex(const Graph& g, VertexId u);

}  // namespace clusvul
