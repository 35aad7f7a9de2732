#include <doctest.h>

#include <cmath>
#include <vector>

#include "simdel/error.hpp"
#include "simdel/similarity.hpp"

using namespace simdel;

TEST_CASE("measures on a small graph") {
  // 0 and 1 share neighbors 2 (degree 2) and 3 (degree 3); 1 also sees 4.
  Graph g(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}, {1, 4}});
  CHECK(similarity(g, Measure::CommonNeighbors, 0, 1) == 2.0);
  CHECK(similarity(g, Measure::Jaccard, 0, 1) == doctest::Approx(2.0 / 3.0));
  CHECK(similarity(g, Measure::AdamicAdar, 0, 1) == doctest::Approx(1 / std::log(2.0) + 1 / std::log(3.0)));
  CHECK(similarity(g, Measure::CommonNeighbors, 2, 2) == 0.0);
  CHECK_THROWS_AS(similarity(g, Measure::Jaccard, 0, 9), InputError);
}

TEST_CASE("every measure is zero exactly when neighborhoods are disjoint") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}, {0, 5}});
  for (auto m : {Measure::CommonNeighbors, Measure::Jaccard, Measure::AdamicAdar}) {
    CHECK(similarity(g, m, 0, 2) > 0.0);
    CHECK(similarity(g, m, 0, 3) == 0.0);
    CHECK(similarity(g, m, 4, 5) == 0.0);
  }
}

TEST_CASE("total similarity and measure names") {
  Graph g(3, {{0, 1}, {1, 2}});
  const std::vector<VertexPair> pairs{{0, 2}, {0, 1}};
  CHECK(total_similarity(g, Measure::CommonNeighbors, pairs) == 1.0);
  CHECK(total_similarity(g, Measure::Jaccard, {}) == 0.0);
  CHECK(parse_measure("cn") == Measure::CommonNeighbors);
  CHECK(parse_measure("jaccard") == Measure::Jaccard);
  CHECK(parse_measure("aa") == Measure::AdamicAdar);
  CHECK(parse_measure(to_string(Measure::AdamicAdar)) == Measure::AdamicAdar);
  CHECK_THROWS_AS(parse_measure("cosine"), InputError);
}
