#include <algorithm>
#include <limits>

#include "clusvul/errors.hpp"
#include "clusvul/solvers.hpp"
#include "solver_internal.hpp"

namespace clusvul {

namespace {

// Depth-first enumeration of k-subsets in lexicographic order. Triangle counts are
// patched on every remove/restore so a leaf costs O(N) instead of a full recount.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::vector<VertexId> candidates, std::size_t k)
      : work_(g),
        tri_(build_triangle_index(g).per_vertex),
        candidates_(std::move(candidates)),
        k_(k),
        mark_(g.num_vertices(), 0) {}

  std::vector<VertexId> run() {
    chosen_.reserve(k_);
    descend(0);
    return best_set_;
  }

 private:
  std::uint64_t common_alive(VertexId v) const {
    std::uint64_t c = 0;
    work_.for_each_neighbor(v, [&](VertexId w) { c += (mark_[w] == stamp_) ? 1 : 0; });
    return c;
  }

  void stamp_neighbors(VertexId x) {
    ++stamp_;
    work_.for_each_neighbor(x, [&](VertexId v) { mark_[v] = stamp_; });
  }

  void remove(VertexId x) {
    stamp_neighbors(x);
    work_.for_each_neighbor(x, [&](VertexId v) { tri_[v] -= common_alive(v); });
    work_.remove_vertex(x);
  }

  void restore(VertexId x) {
    work_.restore_vertex(x);
    stamp_neighbors(x);
    work_.for_each_neighbor(x, [&](VertexId v) { tri_[v] += common_alive(v); });
  }

  double leaf_value() const {
    double sum = 0.0;
    for (VertexId v = 0; v < work_.num_vertices(); ++v) {
      if (work_.alive(v)) sum += lcc_value(tri_[v], work_.degree(v));
    }
    return sum / static_cast<double>(work_.num_alive());
  }

  void descend(std::size_t from) {
    if (chosen_.size() == k_) {
      const double value = leaf_value();
      // Strict improvement by more than rounding noise keeps the first
      // (lexicographically smallest) of numerically tied sets.
      if (best_set_.empty() || value < best_value_ - 1e-12) {
        best_value_ = value;
        best_set_ = chosen_;
        if (value == 0.0) done_ = true;
      }
      return;
    }
    const std::size_t remaining = k_ - chosen_.size();
    for (std::size_t i = from; i + remaining <= candidates_.size() && !done_; ++i) {
      const VertexId x = candidates_[i];
      remove(x);
      chosen_.push_back(x);
      descend(i + 1);
      chosen_.pop_back();
      restore(x);
    }
  }

  Graph work_;
  std::vector<std::uint64_t> tri_;
  std::vector<VertexId> candidates_;
  std::size_t k_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<VertexId> chosen_;
  std::vector<VertexId> best_set_;
  double best_value_ = std::numeric_limits<double>::infinity();
  bool done_ = false;
};

}  // namespace

AttackResult optimal_exhaustive(const Graph& g, std::size_t k, const ExhaustiveOptions& opts) {
  detail::check_budget_k(g, k, "optimal_exhaustive");
  const auto start = detail::Clock::now();

  std::vector<VertexId> candidates = opts.candidates.empty() ? g.alive_vertices() : opts.candidates;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (VertexId u : candidates) {
    if (!g.alive(u)) {
      throw DomainError("optimal_exhaustive: candidate " + std::to_string(u) + " is dead or out of range");
    }
  }
  if (k > candidates.size()) {
    throw DomainError("optimal_exhaustive: k=" + std::to_string(k) + " exceeds the " +
                      std::to_string(candidates.size()) + " candidates");
  }
  const std::uint64_t subsets = binomial_saturating(candidates.size(), k);
  if (subsets > opts.budget) {
    throw CapacityError("optimal_exhaustive: C(" + std::to_string(candidates.size()) + "," + std::to_string(k) +
                        ") = " + std::to_string(subsets) + " subsets exceeds the enumeration budget of " +
                        std::to_string(opts.budget));
  }

  const std::vector<VertexId> best = SubsetSearch(g, std::move(candidates), k).run();
  const double search_ms = detail::ms_since(start);

  detail::Recorder rec(g, "optimal", std::nullopt);
  for (VertexId u : best) rec.remove(u);
  AttackResult result = std::move(rec).finish();
  result.elapsed_ms[0] += search_ms;
  return result;
}

}  // namespace clusvul
