#include <numeric>
#include <sstream>

#include "clusvul/solvers.hpp"
#include "solver_internal.hpp"

namespace clusvul {

std::string emit_cubic_ip(const Graph& g, std::size_t k) {
  detail::check_budget_k(g, k, "emit_cubic_ip");
  const std::uint64_t n = g.num_alive();
  const std::uint64_t survivors = n - k;

  std::ostringstream out;
  out << "# cubic 0/1 program: minimize the ALCC-style objective over survivors\n";
  out << "# z_u = 1 - x_u where x_u = 1 iff vertex u is removed\n";
  out << "# degrees are those of the input graph; normalization uses N - k\n";
  out << "# vars " << n << '\n';
  out << "# budget " << k << '\n';

  std::vector<std::uint8_t> is_nbr(g.num_vertices(), 0);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!g.alive(u) || g.degree(u) < 2) continue;
    const std::uint64_t d = g.degree(u);
    // e_ui e_uj e_ij appears for (i, j) and (j, i); fold the pair into one monomial.
    std::uint64_t num = 2;
    std::uint64_t den = d * (d - 1) * survivors;
    const std::uint64_t gcd = std::gcd(num, den);
    num /= gcd;
    den /= gcd;

    const auto nbrs = g.neighbors(u);
    for (VertexId v : nbrs) is_nbr[v] = 1;
    for (VertexId i : nbrs) {
      g.for_each_neighbor(i, [&](VertexId j) {
        if (j > i && is_nbr[j]) out << num << '/' << den << ' ' << u << ' ' << i << ' ' << j << '\n';
      });
    }
    for (VertexId v : nbrs) is_nbr[v] = 0;
  }
  out << "sum z >= " << survivors << '\n';
  return out.str();
}

}  // namespace clusvul
