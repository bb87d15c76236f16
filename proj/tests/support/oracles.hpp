#pragma once

// Brute-force references built only from the alive edge set. They never call
// into the triangle index, the residual tracker or the solvers.

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "clusvul/graph.hpp"

namespace clusvul::oracle {

struct Dense {
  std::size_t n = 0;
  std::vector<std::uint8_t> alive;
  std::vector<std::vector<std::uint8_t>> adj;

  explicit Dense(const Graph& g) : n(g.num_vertices()), alive(n, 0), adj(n, std::vector<std::uint8_t>(n, 0)) {
    for (VertexId u = 0; u < n; ++u) alive[u] = g.alive(u) ? 1 : 0;
    for (const Edge& e : g.alive_edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  }

  void kill(VertexId u) {
    alive[u] = 0;
    for (std::size_t v = 0; v < n; ++v) adj[u][v] = adj[v][u] = 0;
  }

  std::size_t alive_count() const {
    std::size_t c = 0;
    for (auto a : alive) c += a;
    return c;
  }

  std::size_t degree(std::size_t u) const {
    std::size_t d = 0;
    for (std::size_t v = 0; v < n; ++v) d += adj[u][v];
    return d;
  }

  // Triple enumeration, O(n^3).
  std::vector<std::uint64_t> triangles_per_vertex() const {
    std::vector<std::uint64_t> t(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (adj[a][b])
          for (std::size_t c = b + 1; c < n; ++c)
            if (adj[a][c] && adj[b][c]) ++t[a], ++t[b], ++t[c];
    return t;
  }

  std::uint64_t triangles_on_edge(std::size_t u, std::size_t v) const {
    std::uint64_t c = 0;
    for (std::size_t w = 0; w < n; ++w) c += adj[u][w] && adj[v][w];
    return c;
  }

  // Fraction of connected neighbor pairs.
  double lcc(std::size_t u) const {
    std::vector<std::size_t> nb;
    for (std::size_t v = 0; v < n; ++v)
      if (adj[u][v]) nb.push_back(v);
    if (nb.size() < 2) return 0.0;
    std::size_t linked = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) linked += adj[nb[i]][nb[j]];
    return static_cast<double>(linked) / (static_cast<double>(nb.size()) * (nb.size() - 1) / 2.0);
  }

  double alcc() const {
    double s = 0.0;
    for (std::size_t u = 0; u < n; ++u)
      if (alive[u]) s += lcc(u);
    return s / static_cast<double>(alive_count());
  }

  double alcc_without(std::size_t u) const {
    Dense copy = *this;
    copy.kill(static_cast<VertexId>(u));
    return copy.alcc();
  }

  // Betweenness from all-pairs BFS distances and path counts:
  // v lies on sigma_sv * sigma_vt of the sigma_st shortest s-t paths.
  std::vector<double> betweenness() const {
    std::vector<std::vector<long long>> dist(n, std::vector<long long>(n, -1));
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      std::queue<std::size_t> q;
      dist[s][s] = 0;
      sigma[s][s] = 1;
      q.push(s);
      while (!q.empty()) {
        const auto v = q.front();
        q.pop();
        for (std::size_t w = 0; w < n; ++w) {
          if (!adj[v][w]) continue;
          if (dist[s][w] < 0) {
            dist[s][w] = dist[s][v] + 1;
            q.push(w);
          }
          if (dist[s][w] == dist[s][v] + 1) sigma[s][w] += sigma[s][v];
        }
      }
    }
    std::vector<double> bc(n, 0.0);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t) {
        if (dist[s][t] <= 0) continue;
        for (std::size_t v = 0; v < n; ++v) {
          if (v == s || v == t || dist[s][v] < 0 || dist[v][t] < 0) continue;
          if (dist[s][v] + dist[v][t] == dist[s][t]) bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
        }
      }
    return bc;
  }
};

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

// Independent of gen_er so that generator bugs cannot mask solver bugs.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, static_cast<VertexId>((u + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges);
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

// Triangle a=0, b=1, c=2 plus pendant d=3 hanging off a.
inline Graph paw() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

// Two triangles sharing vertex 0.
inline Graph bowtie() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph barbell() { return make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}}); }

inline Graph petersen() {
  return make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.alive_edges();
  const auto shift = static_cast<VertexId>(a.num_vertices());
  for (const Edge& e : b.alive_edges()) edges.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

}  // namespace clusvul::oracle
