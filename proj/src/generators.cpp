#include "clusvul/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "clusvul/errors.hpp"

namespace clusvul {

namespace {

void check_probability(double p, const char* op) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError(std::string(op) + ": probability " + std::to_string(p) + " outside [0, 1]");
  }
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "gen_er");
  if (n < 1) throw DomainError("gen_er: n must be at least 1");
  std::vector<Edge> edges;
  if (p == 1.0) {
    edges.reserve(n * (n - 1) / 2);
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) edges.push_back({w, v});
    }
  } else if (p > 0.0) {
    // Geometric skipping over the lower triangle (Batagelj & Brandes).
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
      const double r = unif(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) edges.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_ba(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  if (m_attach < 1 || n <= m_attach) {
    throw DomainError("gen_ba: need n > m_attach >= 1 (n=" + std::to_string(n) +
                      ", m_attach=" + std::to_string(m_attach) + ")");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m_attach * (m_attach - 1) / 2 + m_attach * (n - m_attach));
  // Every edge endpoint once: sampling this uniformly is degree-proportional.
  std::vector<VertexId> endpoints;
  for (VertexId a = 0; a < m_attach; ++a) {
    for (VertexId b = a + 1; b < m_attach; ++b) {
      edges.push_back({a, b});
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::vector<VertexId> chosen;
  for (auto v = static_cast<VertexId>(m_attach); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < m_attach) {
      VertexId t;
      if (endpoints.empty()) {
        t = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
      } else {
        t = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
      }
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (VertexId t : chosen) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_ws_torus(std::size_t n, std::size_t k_hops, double p, std::uint64_t seed, RewireStats* stats) {
  check_probability(p, "gen_ws_torus");
  if (k_hops < 1 || n < 2 * k_hops + 1) {
    throw DomainError("gen_ws_torus: need k_hops >= 1 and n >= 2*k_hops+1 (n=" + std::to_string(n) +
                      ", k_hops=" + std::to_string(k_hops) + ")");
  }
  const std::size_t total = n * n;
  if (total > std::numeric_limits<VertexId>::max()) throw CapacityError("gen_ws_torus: n*n too large");
  const auto k = static_cast<std::int64_t>(k_hops);
  const auto side = static_cast<std::int64_t>(n);

  std::vector<Edge> edges;
  edges.reserve(total * k_hops * (k_hops + 1));
  for (std::int64_t j = 0; j < side; ++j) {
    for (std::int64_t i = 0; i < side; ++i) {
      const auto u = static_cast<VertexId>(j * side + i);
      for (std::int64_t dy = -k; dy <= k; ++dy) {
        const std::int64_t span = k - std::abs(dy);
        for (std::int64_t dx = -span; dx <= span; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const std::int64_t x = ((i + dx) % side + side) % side;
          const std::int64_t y = ((j + dy) % side + side) % side;
          const auto v = static_cast<VertexId>(y * side + x);
          if (u < v) edges.push_back({u, v});
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  RewireStats local;
  if (p > 0.0) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution flip(p);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(total - 1));
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const Edge& e : edges) present.insert(pair_key(e.u, e.v));

    for (Edge& e : edges) {
      if (!flip(rng)) continue;
      present.erase(pair_key(e.u, e.v));
      bool placed = false;
      for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
        const VertexId a = pick(rng);
        const VertexId b = pick(rng);
        if (a == b || present.count(pair_key(a, b))) continue;
        e = Edge{std::min(a, b), std::max(a, b)};
        placed = true;
      }
      present.insert(pair_key(e.u, e.v));
      ++(placed ? local.rewired : local.kept_after_retries);
    }
  }
  if (stats) *stats = local;
  return Graph::from_edges(total, edges);
}

}  // namespace clusvul
