#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clusvul/csv.hpp"
#include "clusvul/graph.hpp"
#include "clusvul/influence.hpp"
#include "clusvul/solvers.hpp"

namespace clusvul {

/// Method tags accepted by run_attack, in default output order.
const std::vector<std::string>& known_methods();

/// Graph from a generator spec: "er:n,p", "ba:n,m" or "ws:n,k_hops,p".
Graph generate_from_spec(const std::string& spec, std::uint64_t seed);

struct ExperimentConfig {
  /// Exactly one of input_path / generator is set.
  std::string input_path;
  std::string generator;
  /// Empty selects default_methods(N).
  std::vector<std::string> methods;
  std::optional<std::size_t> k;
  std::optional<double> k_fraction;
  /// One run per (method, seed). Generated inputs use the first seed.
  std::vector<std::uint64_t> seeds{1};
  DeltaMode mode = DeltaMode::kExact;
  /// Keep simple_greedy in the default set above 5000 vertices.
  bool force_simple_greedy = false;
  /// Write 0 in elapsed_ms so repeated runs produce identical bytes.
  bool record_timing = true;
  std::uint64_t optimal_budget = 100'000'000;
  /// Worker threads for independent runs; output order does not depend on it.
  std::size_t threads = 1;
};

std::vector<std::string> default_methods(std::size_t n_vertices, bool force_simple_greedy);

/// max(1, floor(fraction * N)) for a fraction, or the absolute k; must land in [1, N).
std::size_t resolve_k(const ExperimentConfig& cfg, std::size_t n_vertices);

Graph load_input(const ExperimentConfig& cfg);

/// Runs one solver by tag.
AttackResult run_method(const Graph& g, const std::string& method, std::size_t k, std::uint64_t seed,
                        DeltaMode mode, std::uint64_t optimal_budget = 100'000'000);

/// Columns: run_id, method, seed, step, removed_vertex, alcc, max_lcc, elapsed_ms.
/// One row per step including step 0 (empty removed_vertex). Rows ordered by
/// (method as configured, seed as configured, step).
CsvTable attack_table(const Graph& g, const ExperimentConfig& cfg);
CsvTable run_attack(const ExperimentConfig& cfg);

struct InfluenceConfig {
  std::size_t n = 20;
  std::size_t k_hops = 3;
  std::vector<double> p_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  SpreadModel model = SpreadModel::kIC;
  double edge_prob = 0.5;
  std::size_t trials = 2000;
  std::uint64_t seed = 1;
};

/// Columns: p, alcc, alcc_normalized, mean_spread, spread_normalized; normalized
/// by the p = 0 row, or the first row if the grid lacks 0 (nan when that value is 0).
CsvTable run_influence(const InfluenceConfig& cfg);

/// Spearman rank correlation with average ranks for ties; NaN if either side is constant.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace clusvul
