#pragma once

// Shared plumbing for the solver translation units.

#include <chrono>
#include <optional>
#include <string>

#include "clusvul/errors.hpp"
#include "clusvul/residual.hpp"
#include "clusvul/solvers.hpp"

namespace clusvul::detail {

using Clock = std::chrono::steady_clock;

inline double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

inline void check_budget_k(const Graph& g, std::size_t k, const char* op) {
  if (k < 1 || k >= g.num_alive()) {
    throw DomainError(std::string(op) + ": k=" + std::to_string(k) + " must satisfy 1 <= k < N=" +
                      std::to_string(g.num_alive()));
  }
}

// Records the residual trajectory while a solver removes vertices.
class Recorder {
 public:
  Recorder(const Graph& g, std::string method, std::optional<std::uint64_t> seed)
      : start_(Clock::now()), residual_(g) {
    result_.method = std::move(method);
    result_.seed = seed;
    snapshot();
  }

  const ResidualGraph& residual() const { return residual_; }

  void remove(VertexId u) {
    residual_.remove(u);
    result_.removed.push_back(u);
    snapshot();
  }

  AttackResult finish() && { return std::move(result_); }

 private:
  void snapshot() {
    result_.alcc_trajectory.push_back(residual_.alcc());
    result_.max_lcc_trajectory.push_back(residual_.max_lcc());
    result_.elapsed_ms.push_back(ms_since(start_));
    start_ = Clock::now();
  }

  Clock::time_point start_;
  ResidualGraph residual_;
  AttackResult result_;
};

}  // namespace clusvul::detail
