#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "simdel/error.hpp"
#include "simdel/graph.hpp"

using namespace simdel;

TEST_CASE("graph construction canonicalizes and rejects bad edges") {
  Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
  CHECK(g.m() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.edges()[0] == Edge{0, 3});
  CHECK(g.edge_index({1, 2}) == 1);
  CHECK_FALSE(g.edge_index({0, 1}).has_value());

  CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(g.neighbors(4), InputError);
}

TEST_CASE("common neighbors agree with the adjacency matrix") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = 2 + rng() % 9;
    const auto edges = oracles::random_edges(rng, n, 30);
    Graph g(n, edges);
    oracles::Matrix m(n, edges);
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        CHECK(g.count_common_neighbors(x, y) == m.common(x, y));
        const auto cn = g.common_neighbors(x, y);
        CHECK(std::is_sorted(cn.begin(), cn.end()));
      }
    }
  }
  Graph g(3, {{0, 1}});
  CHECK_THROWS_AS(g.common_neighbors(1, 1), InputError);
}

TEST_CASE("stats report max and average degree") {
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const auto s = star.stats();
  CHECK(s.n == 4);
  CHECK(s.m == 3);
  CHECK(s.max_degree == 3);
  CHECK(s.avg_degree == doctest::Approx(1.5));
  CHECK(s.avg_degree <= static_cast<double>(s.max_degree));
  CHECK(Graph().stats().avg_degree == 0.0);
}

TEST_CASE("without_edges drops listed edges only") {
  Graph g(3, {{0, 1}, {1, 2}});
  const std::vector<Edge> gone{{1, 2}, {0, 2}};
  const auto h = g.without_edges(gone);
  CHECK(h.m() == 1);
  CHECK(h.has_edge(0, 1));
  CHECK(h.n() == 3);
}

TEST_CASE("edge list parsing") {
  const auto lg = parse_edge_list(
      "% konect header\n"
      "# comment\n"
      "\n"
      "10 20 1 1234\n"
      "20 30\n"
      "30 30\n"
      "20 10\n");
  CHECK(lg.graph.n() == 3);
  CHECK(lg.graph.m() == 2);
  CHECK(lg.labels == std::vector<std::uint64_t>{10, 20, 30});

  std::ostringstream out;
  write_edge_list(out, lg.graph, lg.labels);
  const auto again = parse_edge_list(out.str());
  CHECK(again.labels == lg.labels);
  CHECK(std::equal(again.graph.edges().begin(), again.graph.edges().end(), lg.graph.edges().begin(),
                   lg.graph.edges().end()));

  try {
    parse_edge_list("1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_edge_list("1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("-1 2\n"), ParseError);
}
