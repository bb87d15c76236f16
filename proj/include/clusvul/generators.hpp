#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "clusvul/graph.hpp"

namespace clusvul {

/// G(n, p): every unordered pair independently with probability p.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Preferential attachment from a complete seed graph on m_attach vertices; every
/// later vertex adds m_attach distinct degree-proportional edges.
Graph gen_ba(std::size_t n, std::size_t m_attach, std::uint64_t seed);

struct RewireStats {
  std::size_t rewired = 0;
  std::size_t kept_after_retries = 0;
};

/// n x n torus: every pair within Manhattan (wraparound) distance k_hops is joined,
/// then each edge is rewired with probability p to a fresh uniformly random
/// non-edge. Vertex (i, j) has id j * n + i. Edge count is unchanged by rewiring.
Graph gen_ws_torus(std::size_t n, std::size_t k_hops, double p, std::uint64_t seed,
                   RewireStats* stats = nullptr);

/// Signed literal: +v for x_v, -v for its negation (v >= 1).
using Literal = std::int32_t;

struct CnfFormula {
  std::size_t n_vars = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

/// Checks the 3-literal form: indices in 1..n_vars, no clause holding x and not-x.
void validate(const CnfFormula& f);

/// DIMACS CNF ("p cnf vars clauses", clause lines terminated by 0, 'c' comments).
/// Clauses with one or two literals are padded by repeating their last literal;
/// repeating a literal does not change the clause's truth value.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// Exhaustive satisfiability check over all 2^n_vars assignments (n_vars <= 24).
bool sat_brute_force(const CnfFormula& f);

enum class VertexRole : std::uint8_t { kBlue, kGreen, kRed };

struct ReductionInstance {
  Graph graph;
  std::size_t k = 0;
  std::vector<VertexRole> roles;

  /// Blue then green vertex ids: the only vertices a minimum triangle cover needs.
  std::vector<VertexId> literal_vertices() const;
};

/// 3-SAT to "remove k vertices leaving a triangle-free graph", k = m + 2l.
/// Layout: clause c literal j -> 3c + j (blue); x_i -> 3l + 2(i-1), not x_i -> that + 1
/// (green); then one red vertex per non-red edge in creation order.
ReductionInstance reduce_3sat(const CnfFormula& f);

}  // namespace clusvul
