#include "clusvul/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

#include "clusvul/errors.hpp"

namespace clusvul {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, BuildStats* stats) {
  if (n > std::numeric_limits<VertexId>::max()) {
    throw CapacityError("vertex count exceeds 32-bit id space");
  }
  BuildStats local;
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw DomainError("edge endpoint " + std::to_string(std::max(e.u, e.v)) + " out of range for n=" +
                        std::to_string(n));
    }
    if (e.u == e.v) {
      ++local.self_loops;
      continue;
    }
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canon.begin(), canon.end());
  const auto last = std::unique(canon.begin(), canon.end());
  local.duplicate_edges = static_cast<std::size_t>(std::distance(last, canon.end()));
  canon.erase(last, canon.end());
  if (stats) *stats = local;

  Graph g;
  g.edges_ = std::move(canon);
  g.alive_.assign(n, 1);
  g.degree_.assign(n, 0);
  for (const Edge& e : g.edges_) {
    ++g.degree_[e.u];
    ++g.degree_[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + g.degree_[u];
  g.neighbors_.resize(2 * g.edges_.size());
  g.edge_of_slot_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v): filling in this order leaves every list sorted.
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.neighbors_[cursor[e.v]] = e.u;
    g.edge_of_slot_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    const Edge& e = g.edges_[id];
    g.neighbors_[cursor[e.u]] = e.v;
    g.edge_of_slot_[cursor[e.u]++] = id;
  }
  g.num_alive_ = n;
  g.num_alive_edges_ = g.edges_.size();
  return g;
}

std::vector<VertexId> Graph::neighbors(VertexId u) const {
  std::vector<VertexId> out;
  out.reserve(degree_[u]);
  for_each_neighbor(u, [&](VertexId v) { out.push_back(v); });
  return out;
}

std::vector<VertexId> Graph::alive_vertices() const {
  std::vector<VertexId> out;
  out.reserve(num_alive_);
  for (VertexId u = 0; u < alive_.size(); ++u) {
    if (alive_[u]) out.push_back(u);
  }
  return out;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  const auto adj = adjacency(u);
  const auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - adj.begin())];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return alive(u) && alive(v) && find_edge(u, v).has_value();
}

void Graph::remove_vertex(VertexId u) {
  if (!contains(u)) throw DomainError("remove_vertex: vertex " + std::to_string(u) + " out of range");
  if (!alive_[u]) throw DomainError("remove_vertex: vertex " + std::to_string(u) + " already removed");
  for_each_neighbor(u, [&](VertexId v) { --degree_[v]; });
  num_alive_edges_ -= degree_[u];
  alive_[u] = 0;
  --num_alive_;
}

void Graph::restore_vertex(VertexId u) {
  if (!contains(u)) throw DomainError("restore_vertex: vertex " + std::to_string(u) + " out of range");
  if (alive_[u]) throw DomainError("restore_vertex: vertex " + std::to_string(u) + " is alive");
  alive_[u] = 1;
  ++num_alive_;
  std::uint32_t d = 0;
  for (VertexId v : adjacency(u)) {
    if (alive_[v]) {
      ++degree_[v];
      ++d;
    }
  }
  degree_[u] = d;
  num_alive_edges_ += d;
}

std::vector<Edge> Graph::alive_edges() const {
  std::vector<Edge> out;
  out.reserve(num_alive_edges_);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edge_alive(e)) out.push_back(edges_[e]);
  }
  return out;
}

bool same_structure(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.alive_vertices() == b.alive_vertices() &&
         a.alive_edges() == b.alive_edges();
}

namespace {

bool parse_id(std::string_view tok, std::size_t line, VertexId& out) {
  if (!tok.empty() && tok.front() == '-') {
    throw ParseError(line, "negative vertex id '" + std::string(tok) + "'");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "malformed token '" + std::string(tok) + "'");
  }
  if (value >= std::numeric_limits<VertexId>::max()) {
    throw ParseError(line, "vertex id " + std::string(tok) + " too large");
  }
  out = static_cast<VertexId>(value);
  return true;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\f' || s[i] == '\v')) ++i;
    const std::size_t start = i;
    while (i < s.size() && !(s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == '\f' || s[i] == '\v')) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

EdgeListParse parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.front().front() == '#') {
      // "# vertices N" pins the vertex count so trailing isolated ids survive a round trip.
      if (toks.size() == 3 && toks[0] == "#" && toks[1] == "vertices") {
        VertexId declared = 0;
        parse_id(toks[2], line_no, declared);
        n = std::max<std::size_t>(n, declared);
      }
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two vertex ids, got " + std::to_string(toks.size()) + " tokens");
    }
    Edge e{};
    parse_id(toks[0], line_no, e.u);
    parse_id(toks[1], line_no, e.v);
    n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
    edges.push_back(e);
  }
  EdgeListParse out;
  out.graph = Graph::from_edges(n, edges, &out.stats);
  return out;
}

EdgeListParse parse_edge_list(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

EdgeListParse read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  const auto edges = g.alive_edges();
  std::size_t implied = 0;
  for (const Edge& e : edges) implied = std::max<std::size_t>(implied, e.v + std::size_t{1});
  if (implied < g.num_vertices()) out << "# vertices " << g.num_vertices() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(g, out);
  return out.str();
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> s) {
  std::vector<std::uint8_t> keep(g.num_vertices(), 0);
  for (VertexId u : s) {
    if (!g.alive(u)) {
      throw DomainError("induced_subgraph: vertex " + std::to_string(u) + " is dead or out of range");
    }
    keep[u] = 1;
  }
  Graph out = g;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (g.alive(u) && !keep[u]) out.remove_vertex(u);
  }
  return out;
}

Graph without_vertex(const Graph& g, VertexId u) {
  Graph out = g;
  out.remove_vertex(u);
  return out;
}

}  // namespace clusvul
