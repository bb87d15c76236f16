#include "clusvul/influence.hpp"

#include <cmath>
#include <string>

#include "clusvul/errors.hpp"

namespace clusvul {

std::string_view to_string(SpreadModel model) { return model == SpreadModel::kIC ? "ic" : "lt"; }

SpreadModel parse_spread_model(std::string_view text) {
  if (text == "ic" || text == "IC") return SpreadModel::kIC;
  if (text == "lt" || text == "LT") return SpreadModel::kLT;
  throw UsageError("unknown spread model '" + std::string(text) + "' (expected ic|lt)");
}

namespace {

// splitmix64 finalizer.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double unit(std::uint64_t key, std::uint64_t item) {
  return static_cast<double>(mix(key ^ mix(item)) >> 11) * 0x1.0p-53;
}

constexpr std::uint64_t kThresholdSalt = 0x5bd1e9955bd1e995ULL;
constexpr std::uint64_t kSourceSalt = 0xc2b2ae3d27d4eb4fULL;

void check_seeds(const Graph& g, std::span<const VertexId> seeds, const char* op) {
  if (seeds.empty()) throw DomainError(std::string(op) + ": seed set is empty");
  for (VertexId s : seeds) {
    if (!g.alive(s)) throw DomainError(std::string(op) + ": seed " + std::to_string(s) + " is not alive");
  }
}

void check_trials(std::size_t trials, const char* op) {
  if (trials < 1) throw DomainError(std::string(op) + ": trials must be at least 1");
}

template <typename Trial>
SpreadEstimate estimate(std::size_t trials, std::uint64_t seed, SpreadModel model, Trial&& run) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const double active = static_cast<double>(run(trial_key(seed, t)));
    sum += active;
    sum_sq += active * active;
  }
  SpreadEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.model = model;
  est.mean_activations = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var = (sum_sq - sum * est.mean_activations) / static_cast<double>(trials - 1);
    est.stddev = std::sqrt(std::max(0.0, var));
  }
  return est;
}

std::size_t count_active(const std::vector<std::uint8_t>& active) {
  std::size_t c = 0;
  for (auto a : active) c += a;
  return c;
}

VertexId random_alive(const std::vector<VertexId>& alive, std::uint64_t key) {
  __extension__ using Wide = unsigned __int128;
  const Wide r = static_cast<Wide>(mix(key ^ kSourceSalt)) * alive.size();
  return alive[static_cast<std::size_t>(r >> 64)];
}

}  // namespace

std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial) { return mix(mix(seed) ^ trial); }

std::vector<std::uint8_t> ic_trial(const Graph& g, std::span<const VertexId> seeds, double edge_prob,
                                   std::uint64_t key) {
  std::vector<std::uint8_t> active(g.num_vertices(), 0);
  std::vector<VertexId> frontier;
  for (VertexId s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      frontier.push_back(s);
    }
  }
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId u = frontier[head];
    g.for_each_incident(u, [&](VertexId v, EdgeId e) {
      if (active[v]) return;
      // One coin per directed edge: u -> v is tried once, when u activates.
      const std::uint64_t coin = 2 * static_cast<std::uint64_t>(e) + (u > v ? 1 : 0);
      if (unit(key, coin) < edge_prob) {
        active[v] = 1;
        frontier.push_back(v);
      }
    });
  }
  return active;
}

std::vector<std::uint8_t> lt_trial(const Graph& g, std::span<const VertexId> seeds, std::uint64_t key) {
  std::vector<std::uint8_t> active(g.num_vertices(), 0);
  std::vector<std::uint32_t> active_in(g.num_vertices(), 0);
  std::vector<VertexId> frontier;
  for (VertexId s : seeds) {
    if (!active[s]) {
      active[s] = 1;
      frontier.push_back(s);
    }
  }
  // Influence only grows, so processing activations in queue order reaches the fixpoint.
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const VertexId u = frontier[head];
    g.for_each_neighbor(u, [&](VertexId v) {
      if (active[v]) return;
      ++active_in[v];
      const double weight = static_cast<double>(active_in[v]) / static_cast<double>(g.degree(v));
      if (weight >= unit(key ^ kThresholdSalt, v)) {
        active[v] = 1;
        frontier.push_back(v);
      }
    });
  }
  return active;
}

SpreadEstimate ic_spread(const Graph& g, std::span<const VertexId> seeds, double edge_prob, std::size_t trials,
                         std::uint64_t seed) {
  check_seeds(g, seeds, "ic_spread");
  check_trials(trials, "ic_spread");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) throw DomainError("ic_spread: edge probability outside [0, 1]");
  return estimate(trials, seed, SpreadModel::kIC,
                  [&](std::uint64_t key) { return count_active(ic_trial(g, seeds, edge_prob, key)); });
}

SpreadEstimate lt_spread(const Graph& g, std::span<const VertexId> seeds, std::size_t trials, std::uint64_t seed) {
  check_seeds(g, seeds, "lt_spread");
  check_trials(trials, "lt_spread");
  return estimate(trials, seed, SpreadModel::kLT,
                  [&](std::uint64_t key) { return count_active(lt_trial(g, seeds, key)); });
}

SpreadEstimate ic_spread_random_seed(const Graph& g, double edge_prob, std::size_t trials, std::uint64_t seed) {
  check_trials(trials, "ic_spread_random_seed");
  if (g.num_alive() == 0) throw DomainError("ic_spread_random_seed: graph has no alive vertices");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw DomainError("ic_spread_random_seed: edge probability outside [0, 1]");
  }
  const auto alive = g.alive_vertices();
  return estimate(trials, seed, SpreadModel::kIC, [&](std::uint64_t key) {
    const VertexId s = random_alive(alive, key);
    return count_active(ic_trial(g, std::span<const VertexId>(&s, 1), edge_prob, key));
  });
}

SpreadEstimate lt_spread_random_seed(const Graph& g, std::size_t trials, std::uint64_t seed) {
  check_trials(trials, "lt_spread_random_seed");
  if (g.num_alive() == 0) throw DomainError("lt_spread_random_seed: graph has no alive vertices");
  const auto alive = g.alive_vertices();
  return estimate(trials, seed, SpreadModel::kLT, [&](std::uint64_t key) {
    const VertexId s = random_alive(alive, key);
    return count_active(lt_trial(g, std::span<const VertexId>(&s, 1), key));
  });
}

double activation_bound(std::size_t k_shared) {
  return 1.0 - 0.5 * std::pow(0.75, static_cast<double>(k_shared));
}

}  // namespace clusvul
