#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "clusvul/graph.hpp"

namespace clusvul {

enum class SpreadModel { kIC, kLT };

std::string_view to_string(SpreadModel model);
SpreadModel parse_spread_model(std::string_view text);

struct SpreadEstimate {
  double mean_activations = 0.0;
  /// Sample standard deviation of the per-trial activation count.
  double stddev = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  SpreadModel model = SpreadModel::kIC;
};

// Randomness is counter-based: trial t of a run with master seed s draws every
// coin from hash(s, t, item), so trials are independent of evaluation order and
// IC runs with different edge probabilities share their random numbers.

/// Key of trial `trial` under master seed `seed`.
std::uint64_t trial_key(std::uint64_t seed, std::uint64_t trial);

/// One independent-cascade realization; returns the activation flags.
std::vector<std::uint8_t> ic_trial(const Graph& g, std::span<const VertexId> seeds, double edge_prob,
                                   std::uint64_t key);

/// One linear-threshold realization with weight 1/d(u) on every edge into u and
/// activation once the active in-weight reaches the threshold.
std::vector<std::uint8_t> lt_trial(const Graph& g, std::span<const VertexId> seeds, std::uint64_t key);

SpreadEstimate ic_spread(const Graph& g, std::span<const VertexId> seeds, double edge_prob, std::size_t trials,
                         std::uint64_t seed);
SpreadEstimate lt_spread(const Graph& g, std::span<const VertexId> seeds, std::size_t trials, std::uint64_t seed);

/// Same estimators with one uniformly random alive seed vertex redrawn per trial.
SpreadEstimate ic_spread_random_seed(const Graph& g, double edge_prob, std::size_t trials, std::uint64_t seed);
SpreadEstimate lt_spread_random_seed(const Graph& g, std::size_t trials, std::uint64_t seed);

/// Lower bound on the IC (p = 1/2) activation probability of a neighbor t of an
/// active s when the two share k_shared neighbors: 1 - (1/2)(3/4)^k_shared.
double activation_bound(std::size_t k_shared);

}  // namespace clusvul
