#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusvul/clustering.hpp"
#include "clusvul/graph.hpp"
#include "clusvul/residual.hpp"

namespace clusvul {

/// How FAGA scores a candidate.
///
/// kPaper evaluates the published update formula as-is. kExact additionally
/// charges every non-neighbor v with -C(v)/(N(N-1)), the effect of the average's
/// denominator shrinking from N to N-1, so the score is the true ALCC drop.
enum class DeltaMode { kPaper, kExact };

std::string_view to_string(DeltaMode mode);
DeltaMode parse_delta_mode(std::string_view text);

/// Removal sequence and its ALCC / max-LCC trajectory.
///
/// Trajectories have removed.size() + 1 entries; index 0 is the input graph.
/// elapsed_ms[0] is setup time (e.g. building the triangle index), elapsed_ms[i]
/// the wall time spent selecting removed[i-1].
struct AttackResult {
  std::string method;
  std::optional<std::uint64_t> seed;
  std::vector<VertexId> removed;
  std::vector<double> alcc_trajectory;
  std::vector<double> max_lcc_trajectory;
  std::vector<double> elapsed_ms;

  double final_alcc() const { return alcc_trajectory.back(); }
};

/// Equality of everything except timings.
bool same_outcome(const AttackResult& a, const AttackResult& b);

/// FAGA score of removing u: ALCC(g) - ALCC(g - u) in exact mode.
double faga_delta(const Graph& g, const TriangleIndex& idx, VertexId u, DeltaMode mode);

/// Round-by-round FAGA state. Each step() scores every alive vertex in
/// O(N + M), removes the best one and updates triangle counts locally.
class FagaSolver {
 public:
  FagaSolver(const Graph& g, DeltaMode mode);

  const ResidualGraph& residual() const noexcept { return residual_; }
  DeltaMode mode() const noexcept { return mode_; }

  /// Scores for all vertex ids; dead vertices get -infinity.
  std::vector<double> scores() const;

  /// Removes and returns the highest-scoring alive vertex. Requires >= 2 alive.
  VertexId step();

 private:
  ResidualGraph residual_;
  DeltaMode mode_;
};

/// Fast adaptive greedy: k rounds, each removing the alive vertex of largest
/// score (ties to the smallest id) while maintaining triangle counts incrementally.
AttackResult faga(const Graph& g, std::size_t k, DeltaMode mode = DeltaMode::kExact);

/// Scores every vertex once by ALCC(g - u) and removes the k lowest at once.
/// The trajectory applies them in ascending score order.
AttackResult simple_greedy(const Graph& g, std::size_t k);

struct ExhaustiveOptions {
  std::uint64_t budget = 100'000'000;
  /// Restrict the search to these vertices; all alive vertices when empty.
  std::vector<VertexId> candidates;
};

/// Minimum-residual-ALCC set of exactly k vertices by enumeration in lexicographic
/// order (ties keep the lexicographically smallest set). Throws CapacityError when
/// C(|candidates|, k) exceeds the budget.
AttackResult optimal_exhaustive(const Graph& g, std::size_t k, const ExhaustiveOptions& opts = {});

AttackResult baseline_random(const Graph& g, std::size_t k, std::uint64_t seed);
AttackResult baseline_max_degree(const Graph& g, std::size_t k);
AttackResult baseline_lcc_greedy(const Graph& g, std::size_t k);
AttackResult baseline_betweenness(const Graph& g, std::size_t k);

/// Exact betweenness of the alive subgraph (Brandes), unordered pairs, endpoints
/// excluded. Dead vertices score 0.
std::vector<double> brandes_betweenness(const Graph& g);

/// Plain-text cubic 0/1 program whose objective is the survivor-form ALCC sum.
/// Grammar is documented in docs/ip_format.md.
std::string emit_cubic_ip(const Graph& g, std::size_t k);

/// ALCC after removing `removed` from g, recomputed from scratch.
double residual_alcc(const Graph& g, std::span<const VertexId> removed);

/// C(n, k) saturated at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace clusvul
