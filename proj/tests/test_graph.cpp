#include <doctest.h>

#include <random>

#include "clusvul/errors.hpp"
#include "clusvul/graph.hpp"
#include "support/oracles.hpp"

using namespace clusvul;

TEST_CASE("parse_edge_list builds a triangle") {
  const auto parsed = parse_edge_list("0 1\n1 2\n2 0");
  CHECK(parsed.graph.num_vertices() == 3);
  CHECK(parsed.graph.num_edges() == 3);
  CHECK(parsed.stats.duplicate_edges == 0);
  CHECK(parsed.stats.self_loops == 0);
}

TEST_CASE("parse_edge_list collapses duplicates and drops self-loops") {
  const auto parsed = parse_edge_list("0 1\n0 1\n1 1");
  CHECK(parsed.graph.num_edges() == 1);
  CHECK(parsed.graph.has_edge(0, 1));
  CHECK(parsed.stats.duplicate_edges == 1);
  CHECK(parsed.stats.self_loops == 1);
}

TEST_CASE("parse_edge_list reads K4 with comments and reversed duplicates") {
  const auto parsed = parse_edge_list("# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 2\n\n  # trailing\n");
  const Graph& g = parsed.graph;
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
  for (VertexId u = 0; u < 4; ++u) CHECK(g.degree(u) == 3);
  CHECK(parsed.stats.duplicate_edges == 1);
}

TEST_CASE("parse_edge_list reports malformed input with its line") {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_list("0 1\n\n2 -3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("7\n"), ParseError);
}

TEST_CASE("write_edge_list output") {
  CHECK(write_edge_list(oracle::complete(3)) == "0 1\n0 2\n1 2\n");
  CHECK(write_edge_list(Graph{}) == "");

  Graph g = oracle::paw();
  g.remove_vertex(0);
  // Vertex 3 is now isolated, so the vertex count is pinned by a header comment.
  CHECK(write_edge_list(g) == "# vertices 4\n1 2\n");
}

TEST_CASE("parse and write round-trip on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
    const Graph g = oracle::random_graph(n, p, rng);
    const Graph back = parse_edge_list(write_edge_list(g)).graph;
    CHECK(same_structure(g, back));
  }
}

TEST_CASE("induced_subgraph") {
  const Graph k4 = oracle::complete(4);
  const std::vector<VertexId> three{0, 2, 3};
  const Graph k3 = induced_subgraph(k4, three);
  CHECK(k3.num_alive() == 3);
  CHECK(k3.num_edges() == 3);
  CHECK(!k3.alive(1));

  const std::vector<VertexId> pair{0, 1};
  CHECK(induced_subgraph(oracle::complete(3), pair).num_edges() == 1);

  const std::vector<VertexId> tri{0, 1, 2};
  const Graph from_paw = induced_subgraph(oracle::paw(), tri);
  CHECK(from_paw.num_edges() == 3);
  for (VertexId u : tri) CHECK(from_paw.degree(u) == 2);

  const std::vector<VertexId> bad{0, 9};
  CHECK_THROWS_AS(induced_subgraph(k4, bad), DomainError);
  Graph holed = k4;
  holed.remove_vertex(1);
  const std::vector<VertexId> dead{1, 2};
  CHECK_THROWS_AS(induced_subgraph(holed, dead), DomainError);
}

TEST_CASE("remove_vertex examples") {
  Graph k3 = oracle::complete(3);
  k3.remove_vertex(1);
  CHECK(k3.num_edges() == 1);
  CHECK(k3.has_edge(0, 2));

  Graph star = oracle::star(3);
  star.remove_vertex(0);
  CHECK(star.num_edges() == 0);
  CHECK(star.num_alive() == 3);

  const Graph paw_minus_d = without_vertex(oracle::paw(), 3);
  CHECK(paw_minus_d.num_edges() == 3);
  CHECK(paw_minus_d.degree(0) == 2);

  CHECK_THROWS_AS(k3.remove_vertex(1), DomainError);
  CHECK_THROWS_AS(k3.remove_vertex(7), DomainError);
  CHECK_THROWS_AS(k3.restore_vertex(0), DomainError);
}

TEST_CASE("degree sum tracks edge count under removal") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(2 + rng() % 30, 0.3, rng);
    while (g.num_alive() > 0) {
      const auto alive = g.alive_vertices();
      const VertexId u = alive[rng() % alive.size()];
      const std::size_t before = g.num_edges();
      const std::size_t du = g.degree(u);
      g.remove_vertex(u);
      std::size_t sum = 0;
      for (VertexId v : g.alive_vertices()) {
        sum += g.degree(v);
        CHECK(g.degree(v) == g.neighbors(v).size());
      }
      CHECK(sum == 2 * g.num_edges());
      CHECK(g.num_edges() == before - du);
    }
  }
}

TEST_CASE("remove then restore is the identity on every query") {
  std::mt19937_64 rng(9);
  for (std::size_t n = 1; n <= 30; ++n) {
    const Graph g = oracle::random_graph(n, 0.35, rng);
    for (VertexId u = 0; u < n; ++u) {
      Graph h = g;
      h.remove_vertex(u);
      CHECK(!h.has_edge(u, (u + 1) % n));
      h.restore_vertex(u);
      REQUIRE(h.num_edges() == g.num_edges());
      REQUIRE(h.num_alive() == g.num_alive());
      for (VertexId a = 0; a < n; ++a) {
        REQUIRE(h.degree(a) == g.degree(a));
        REQUIRE(h.neighbors(a) == g.neighbors(a));
        for (VertexId b = 0; b < n; ++b) REQUIRE(h.has_edge(a, b) == g.has_edge(a, b));
      }
    }
  }
}

TEST_CASE("adjacency is symmetric and simple") {
  std::mt19937_64 rng(2);
  const Graph g = oracle::random_graph(40, 0.2, rng);
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const auto adj = g.adjacency(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      CHECK(adj[i] != u);
      if (i) CHECK(adj[i - 1] < adj[i]);
      CHECK(g.has_edge(adj[i], u));
      const Edge& e = g.edge(g.incident_edges(u)[i]);
      CHECK(((e.u == u && e.v == adj[i]) || (e.v == u && e.u == adj[i])));
    }
  }
}
