#include "oracles.hpp"

#include "sigidx/errors.hpp"
#include "sigidx/graph.hpp"

#include <doctest.h>

#include <sstream>

using namespace sigidx;

TEST_CASE("construction rejects malformed edge sets") {
  const Edge loop[] = {{1, 1}};
  const Edge dup[] = {{0, 1}, {1, 0}};
  const Edge range[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), DomainError);
  CHECK_THROWS_AS(Graph(3, dup), DomainError);
  CHECK_THROWS_AS(Graph(3, range), DomainError);
}

TEST_CASE("edges and adjacency are normalized") {
  const Edge raw[] = {{2, 0}, {1, 0}};
  const Graph g(3, raw);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 2});
  CHECK(g.neighbors(0).size() == 2);
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("family degree profiles") {
  CHECK(degree_profile(path_graph(5)).max_degree == 2);
  CHECK(degree_profile(path_graph(5)).min_degree == 1);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  CHECK(star_graph(6).degree(0) == 5);
  CHECK(complete_graph(5).edge_count() == 10);

  const Graph ds = double_star_graph(3, 4);
  CHECK(ds.vertex_count() == 7);
  CHECK(ds.degree(0) == 3);
  CHECK(ds.degree(1) == 4);
  CHECK(ds.is_tree());

  const Graph kb = complete_bipartite_graph(2, 3);
  CHECK(kb.edge_count() == 6);

  // Threshold rule i + j >= n + 1 on labels 1..n.
  const Graph mono = monogenic_semigroup_graph(5);
  CHECK(mono.vertex_count() == 5);
  CHECK(oracle::degrees(mono) == std::vector<std::int64_t>{1, 2, 2, 3, 4});
}

TEST_CASE("family specs parse and round trip") {
  CHECK(to_string(parse_family("double_star:3,4")) == "double_star:3,4");
  CHECK(build_family(parse_family("path:5")) == path_graph(5));
  CHECK_THROWS_AS(parse_family("hypercube:3"), InputError);
  CHECK_THROWS_AS(parse_family("path"), InputError);
  CHECK_THROWS_AS(build_family(parse_family("path:2,3")), InputError);
}

TEST_CASE("connectivity and tree predicates") {
  CHECK(path_graph(4).is_tree());
  CHECK_FALSE(cycle_graph(4).is_tree());
  CHECK_FALSE(Graph(3).is_connected());
  CHECK(Graph(1).is_tree());
}

TEST_CASE("complement is an involution and partitions the pairs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(2 + seed % 9, 0.4, seed);
    const Graph c = complement(g);
    const std::size_t n = g.vertex_count();
    CHECK(g.edge_count() + c.edge_count() == n * (n - 1) / 2);
    CHECK(complement(c) == g);
  }
}

TEST_CASE("cartesian product obeys the degree law") {
  const Graph g = path_graph(3);
  const Graph h = cycle_graph(4);
  const Graph p = cartesian_product(g, h);
  REQUIRE(p.vertex_count() == 12);
  CHECK(p.edge_count() == g.edge_count() * 4 + h.edge_count() * 3);
  for (VertexId u = 0; u < 3; ++u)
    for (VertexId v = 0; v < 4; ++v) CHECK(p.degree(u * 4 + v) == g.degree(u) + h.degree(v));
}

TEST_CASE("edge list reader") {
  SUBCASE("header and comments") {
    std::istringstream in("# n=4\n# a comment\n0 1\n\n1 2\n");
    const Graph g = read_edge_list(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("order inferred without header") {
    std::istringstream in("0 3\n");
    CHECK(read_edge_list(in).vertex_count() == 4);
  }
  SUBCASE("errors carry line numbers") {
    const auto line_of = [](const std::string& text) -> std::size_t {
      std::istringstream in(text);
      try {
        read_edge_list(in);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 0;
    };
    CHECK(line_of("0 1\n2 2\n") == 2);
    CHECK(line_of("0 1\n1 2\n1 0\n") == 3);
    CHECK(line_of("# n=3\n0 1\n1 5\n") == 3);
    CHECK(line_of("0 1\nzero one\n") == 2);
    CHECK(line_of("0 1 2\n") == 1);
  }
  SUBCASE("writer round trip") {
    const Graph g = double_star_graph(3, 3);
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in) == g);
  }
  SUBCASE("isolated trailing vertices survive the round trip") {
    const Graph g(5);
    std::istringstream in(to_edge_list(g));
    CHECK(read_edge_list(in).vertex_count() == 5);
  }
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), InputError);
}
