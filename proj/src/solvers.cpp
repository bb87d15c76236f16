#include "clusvul/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

#include "clusvul/errors.hpp"
#include "solver_internal.hpp"

namespace clusvul {

std::string_view to_string(DeltaMode mode) { return mode == DeltaMode::kPaper ? "paper" : "exact"; }

DeltaMode parse_delta_mode(std::string_view text) {
  if (text == "paper") return DeltaMode::kPaper;
  if (text == "exact") return DeltaMode::kExact;
  throw UsageError("unknown delta mode '" + std::string(text) + "' (expected paper|exact)");
}

bool same_outcome(const AttackResult& a, const AttackResult& b) {
  return a.method == b.method && a.seed == b.seed && a.removed == b.removed &&
         a.alcc_trajectory == b.alcc_trajectory && a.max_lcc_trajectory == b.max_lcc_trajectory;
}

namespace {

using detail::Clock;
using detail::ms_since;
using detail::check_budget_k;
using detail::Recorder;

// First alive id maximizing score; exact comparisons.
template <typename Score>
VertexId argmax_alive(const Graph& g, Score&& score) {
  VertexId best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  bool found = false;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!g.alive(u)) continue;
    const double s = score(u);
    if (!found || s > best_score) {
      best = u;
      best_score = s;
      found = true;
    }
  }
  return best;
}

// Contribution of neighbor v (degree d, T(v) triangles, tr(u, v) shared) to u's score.
inline double neighbor_term(std::uint64_t t_v, std::size_t d, std::uint64_t tr_uv, double n) {
  if (d > 2) {
    const double dv = static_cast<double>(d);
    const double tv = static_cast<double>(t_v);
    const double num = 4.0 * tv * (1.0 - n) + 2.0 * static_cast<double>(tr_uv) * n * dv - 2.0 * tv * dv;
    return num / (n * (n - 1.0) * dv * (dv - 1.0) * (dv - 2.0));
  }
  if (d == 2) return static_cast<double>(t_v) / n;
  return 0.0;
}

inline double own_term(std::uint64_t t_u, std::size_t d, double n) { return lcc_value(t_u, d) / n; }

void check_index(const Graph& g, const TriangleIndex& idx, VertexId u) {
  if (idx.per_vertex.size() != g.num_vertices() || idx.per_edge.size() != g.num_edges_total()) {
    throw DomainError("faga_delta: triangle index does not match graph shape");
  }
  auto bad_vertex = [&](VertexId v) {
    const std::uint64_t d = g.degree(v);
    return idx.per_vertex[v] > (d * (d > 0 ? d - 1 : 0)) / 2;
  };
  if (bad_vertex(u)) throw DomainError("faga_delta: inconsistent triangle count at vertex " + std::to_string(u));
  g.for_each_incident(u, [&](VertexId v, EdgeId e) {
    const std::uint64_t cap = std::min(g.degree(u), g.degree(v)) - 1;
    if (bad_vertex(v) || idx.per_edge[e] > cap) {
      throw DomainError("faga_delta: inconsistent triangle counts around vertex " + std::to_string(u));
    }
  });
}

}  // namespace

double faga_delta(const Graph& g, const TriangleIndex& idx, VertexId u, DeltaMode mode) {
  if (!g.alive(u)) throw DomainError("faga_delta: vertex " + std::to_string(u) + " is not alive");
  if (g.num_alive() < 2) throw DomainError("faga_delta: needs at least two alive vertices");
  check_index(g, idx, u);

  const double n = static_cast<double>(g.num_alive());
  double delta = own_term(idx.per_vertex[u], g.degree(u), n);
  double neighbor_cc = 0.0;
  g.for_each_incident(u, [&](VertexId v, EdgeId e) {
    delta += neighbor_term(idx.per_vertex[v], g.degree(v), idx.per_edge[e], n);
    neighbor_cc += lcc_value(idx.per_vertex[v], g.degree(v));
  });
  if (mode == DeltaMode::kExact) {
    double total_cc = 0.0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.alive(v)) total_cc += lcc_value(idx.per_vertex[v], g.degree(v));
    }
    const double others = total_cc - lcc_value(idx.per_vertex[u], g.degree(u)) - neighbor_cc;
    delta -= others / (n * (n - 1.0));
  }
  return delta;
}

FagaSolver::FagaSolver(const Graph& g, DeltaMode mode) : residual_(g), mode_(mode) {}

std::vector<double> FagaSolver::scores() const {
  const Graph& g = residual_.graph();
  const TriangleIndex& idx = residual_.index();
  const double n = static_cast<double>(g.num_alive());
  std::vector<double> cc(g.num_vertices(), 0.0);
  double total_cc = 0.0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.alive(v)) {
      cc[v] = lcc_value(idx.per_vertex[v], g.degree(v));
      total_cc += cc[v];
    }
  }
  std::vector<double> out(g.num_vertices(), -std::numeric_limits<double>::infinity());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!g.alive(u)) continue;
    double delta = own_term(idx.per_vertex[u], g.degree(u), n);
    double neighbor_cc = 0.0;
    g.for_each_incident(u, [&](VertexId v, EdgeId e) {
      delta += neighbor_term(idx.per_vertex[v], g.degree(v), idx.per_edge[e], n);
      neighbor_cc += cc[v];
    });
    if (mode_ == DeltaMode::kExact) delta -= (total_cc - cc[u] - neighbor_cc) / (n * (n - 1.0));
    out[u] = delta;
  }
  return out;
}

VertexId FagaSolver::step() {
  if (residual_.alive() < 2) throw DomainError("FagaSolver::step: needs at least two alive vertices");
  const auto s = scores();
  const VertexId best = argmax_alive(residual_.graph(), [&](VertexId u) { return s[u]; });
  residual_.remove(best);
  return best;
}

AttackResult faga(const Graph& g, std::size_t k, DeltaMode mode) {
  check_budget_k(g, k, "faga");
  auto start = Clock::now();
  FagaSolver solver(g, mode);
  AttackResult result;
  result.method = "faga";
  result.alcc_trajectory.push_back(solver.residual().alcc());
  result.max_lcc_trajectory.push_back(solver.residual().max_lcc());
  result.elapsed_ms.push_back(ms_since(start));
  for (std::size_t i = 0; i < k; ++i) {
    start = Clock::now();
    result.removed.push_back(solver.step());
    result.alcc_trajectory.push_back(solver.residual().alcc());
    result.max_lcc_trajectory.push_back(solver.residual().max_lcc());
    result.elapsed_ms.push_back(ms_since(start));
  }
  return result;
}

AttackResult simple_greedy(const Graph& g, std::size_t k) {
  check_budget_k(g, k, "simple_greedy");
  const auto start = Clock::now();
  Graph work = g;
  std::vector<std::pair<double, VertexId>> ranked;
  ranked.reserve(g.num_alive());
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!g.alive(u)) continue;
    work.remove_vertex(u);
    ranked.emplace_back(alcc(work), u);
    work.restore_vertex(u);
  }
  std::sort(ranked.begin(), ranked.end());
  const double scoring_ms = ms_since(start);

  Recorder rec(g, "simple_greedy", std::nullopt);
  for (std::size_t i = 0; i < k; ++i) rec.remove(ranked[i].second);
  AttackResult result = std::move(rec).finish();
  // The scoring pass is where the work is; charge it as setup.
  result.elapsed_ms[0] += scoring_ms;
  return result;
}

AttackResult baseline_random(const Graph& g, std::size_t k, std::uint64_t seed) {
  check_budget_k(g, k, "baseline_random");
  std::vector<VertexId> pool = g.alive_vertices();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  Recorder rec(g, "random", seed);
  for (std::size_t i = 0; i < k; ++i) rec.remove(pool[i]);
  return std::move(rec).finish();
}

AttackResult baseline_max_degree(const Graph& g, std::size_t k) {
  check_budget_k(g, k, "baseline_max_degree");
  Recorder rec(g, "max_degree", std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    const Graph& cur = rec.residual().graph();
    rec.remove(argmax_alive(cur, [&](VertexId u) { return static_cast<double>(cur.degree(u)); }));
  }
  return std::move(rec).finish();
}

AttackResult baseline_lcc_greedy(const Graph& g, std::size_t k) {
  check_budget_k(g, k, "baseline_lcc_greedy");
  Recorder rec(g, "lcc_greedy", std::nullopt);
  // The residual index keeps T(v) exact; a removal only changes the LCC of the
  // removed vertex's neighbors, so per-round rescoring is O(1) per vertex.
  for (std::size_t i = 0; i < k; ++i) {
    const ResidualGraph& r = rec.residual();
    rec.remove(argmax_alive(r.graph(), [&](VertexId u) { return r.lcc(u); }));
  }
  return std::move(rec).finish();
}

std::vector<double> brandes_betweenness(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::int32_t kUnseen = -1;
  constexpr std::int32_t kDead = -2;  // never equals a BFS level, so no liveness checks below
  std::vector<double> score(n, 0.0);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<std::int32_t> dist(n, kUnseen);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v)) dist[v] = kDead;
  }
  // One spare slot: the branch-free push writes order[tail] before checking.
  std::vector<VertexId> order(n + 1);

  for (VertexId s = 0; s < n; ++s) {
    if (dist[s] == kDead) continue;
    // Discovery and accumulation are written branch-free: on sparse random
    // graphs the comparisons are unpredictable and mispredictions dominate.
    sigma[s] = 1.0;
    dist[s] = 0;
    order[0] = s;
    std::size_t tail = 1;
    for (std::size_t head = 0; head < tail; ++head) {
      const VertexId v = order[head];
      const std::int32_t next = dist[v] + 1;
      const double sv = sigma[v];
      for (VertexId w : g.adjacency(v)) {
        const bool fresh = dist[w] == kUnseen;
        dist[w] = fresh ? next : dist[w];
        order[tail] = w;
        tail += fresh;
        sigma[w] += dist[w] == next ? sv : 0.0;
      }
    }
    for (std::size_t i = tail; i-- > 1;) {
      const VertexId w = order[i];
      const std::int32_t prev = dist[w] - 1;
      const double coef = (1.0 + delta[w]) / sigma[w];
      for (VertexId v : g.adjacency(w)) {
        delta[v] += dist[v] == prev ? sigma[v] * coef : 0.0;
      }
      score[w] += delta[w];
    }
    for (std::size_t i = 0; i < tail; ++i) {
      const VertexId v = order[i];
      sigma[v] = 0.0;
      delta[v] = 0.0;
      dist[v] = kUnseen;
    }
  }
  // Each unordered pair was accumulated from both endpoints.
  for (double& x : score) x /= 2.0;
  return score;
}

AttackResult baseline_betweenness(const Graph& g, std::size_t k) {
  check_budget_k(g, k, "baseline_betweenness");
  Recorder rec(g, "betweenness", std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    const Graph& cur = rec.residual().graph();
    const auto bc = brandes_betweenness(cur);
    // Accumulation order differs between symmetric vertices, so treat scores
    // within a relative 1e-9 of the maximum as tied.
    double top = -1.0;
    for (VertexId u = 0; u < cur.num_vertices(); ++u) {
      if (cur.alive(u)) top = std::max(top, bc[u]);
    }
    const double floor = top - 1e-9 * std::max(1.0, top);
    rec.remove(argmax_alive(cur, [&](VertexId u) { return bc[u] >= floor ? 1.0 : 0.0; }));
  }
  return std::move(rec).finish();
}

double residual_alcc(const Graph& g, std::span<const VertexId> removed) {
  Graph work = g;
  for (VertexId u : removed) work.remove_vertex(u);
  return alcc(work);
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace clusvul
