#include <cstdlib>
#include <sstream>

#include "clusvul/errors.hpp"
#include "clusvul/generators.hpp"

namespace clusvul {

void validate(const CnfFormula& f) {
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const auto& clause = f.clauses[c];
    for (Literal lit : clause) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.n_vars) {
        throw DomainError("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                          " outside 1.." + std::to_string(f.n_vars));
      }
    }
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if (clause[a] == -clause[b]) {
          throw DomainError("clause " + std::to_string(c + 1) + " contains a variable and its negation");
        }
      }
    }
  }
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula f;
  bool have_header = false;
  std::size_t declared = 0;
  std::vector<Literal> pending;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "%") break;
    if (tok == "p") {
      std::string kind;
      long long vars = -1, clauses = -1;
      if (!(ls >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 || clauses < 0) {
        throw ParseError(line_no, "malformed problem line");
      }
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      have_header = true;
      f.n_vars = static_cast<std::size_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    do {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw ParseError(line_no, "malformed literal '" + tok + "'");
      if (lit == 0) {
        if (pending.empty()) throw ParseError(line_no, "empty clause");
        if (pending.size() > 3) throw ParseError(line_no, "clause with more than 3 literals");
        while (pending.size() < 3) pending.push_back(pending.back());
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (static_cast<std::size_t>(std::labs(lit)) > f.n_vars) {
          throw ParseError(line_no, "literal " + tok + " exceeds declared variable count");
        }
        pending.push_back(static_cast<Literal>(lit));
      }
    } while (ls >> tok);
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause");
  if (f.clauses.size() != declared) {
    throw ParseError(line_no, "header declares " + std::to_string(declared) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
  }
  try {
    validate(f);
  } catch (const DomainError& e) {
    throw ParseError(line_no, e.what());
  }
  return f;
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

bool sat_brute_force(const CnfFormula& f) {
  validate(f);
  if (f.n_vars > 24) {
    throw CapacityError("sat_brute_force: " + std::to_string(f.n_vars) + " variables exceeds the limit of 24");
  }
  const std::uint32_t limit = std::uint32_t{1} << f.n_vars;
  for (std::uint32_t assignment = 0; assignment < limit; ++assignment) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (Literal lit : clause) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1u;
        if (value == (lit > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

std::vector<VertexId> ReductionInstance::literal_vertices() const {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < roles.size(); ++u) {
    if (roles[u] != VertexRole::kRed) out.push_back(u);
  }
  return out;
}

ReductionInstance reduce_3sat(const CnfFormula& f) {
  validate(f);
  const std::size_t l = f.clauses.size();
  const std::size_t m = f.n_vars;
  const auto green_base = static_cast<VertexId>(3 * l);
  auto literal_vertex = [&](Literal lit) {
    return green_base + static_cast<VertexId>(2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0));
  };

  std::vector<Edge> core;
  for (std::size_t c = 0; c < l; ++c) {
    const auto b = static_cast<VertexId>(3 * c);
    core.push_back({b, b + 1});
    core.push_back({b, b + 2});
    core.push_back({b + 1, b + 2});
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto pos = static_cast<VertexId>(green_base + 2 * i);
    core.push_back({pos, pos + 1});
  }
  for (std::size_t c = 0; c < l; ++c) {
    for (std::size_t j = 0; j < 3; ++j) {
      core.push_back({static_cast<VertexId>(3 * c + j), literal_vertex(f.clauses[c][j])});
    }
  }

  ReductionInstance inst;
  const std::size_t n = 3 * l + 2 * m + core.size();
  inst.roles.assign(n, VertexRole::kRed);
  std::fill(inst.roles.begin(), inst.roles.begin() + 3 * l, VertexRole::kBlue);
  std::fill(inst.roles.begin() + 3 * l, inst.roles.begin() + 3 * l + 2 * m, VertexRole::kGreen);

  std::vector<Edge> edges = core;
  auto red = static_cast<VertexId>(3 * l + 2 * m);
  for (const Edge& e : core) {
    edges.push_back({e.u, red});
    edges.push_back({e.v, red});
    ++red;
  }
  inst.graph = Graph::from_edges(n, edges);
  inst.k = m + 2 * l;
  return inst;
}

}  // namespace clusvul
